"""Closed-form associated distributions ``sum_j c_j delta^(j)`` for the product results."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from ..exactcalc import Q, to_string
from ..models import PiecewiseModel, even_odd_parts, mean_jump


class OracleInapplicable(ValueError):
    """The function's class order is too low for the requested formula."""


@dataclass(frozen=True)
class OracleResult:
    coeffs: tuple
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Q(c) for c in self.coeffs))

    def padded(self, n: int) -> tuple:
        return self.coeffs + (Q(0),) * (n - len(self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, OracleResult):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return self.padded(n) == other.padded(n)

    def __hash__(self):
        c = list(self.coeffs)
        while c and not c[-1]:
            c.pop()
        return hash(tuple(c))

    def __add__(self, other: "OracleResult") -> "OracleResult":
        n = max(len(self.coeffs), len(other.coeffs))
        return OracleResult(tuple(a + b for a, b in zip(self.padded(n), other.padded(n))))

    def strings(self) -> list[str]:
        return [to_string(c) for c in self.coeffs]

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{to_string(c)}*delta{chr(39) * j}")
        return " + ".join(terms) or "0"


def _require(f: PiecewiseModel, order: int):
    if f.kd < order:
        raise OracleInapplicable(f"needs class order >= {order}, model has {f.kd}")


def oracle_thm1(f: PiecewiseModel) -> OracleResult:
    """``F . D' ~ -(h0 + m1) delta + m0 delta'``."""
    _require(f, 2)
    m0, h0 = mean_jump(f, 0)
    m1, _ = mean_jump(f, 1)
    return OracleResult((-(h0 + m1), m0), "thm1")


def oracle_thm2(f: PiecewiseModel) -> OracleResult:
    """``F . D'' ~ (h1 + m2) delta - (3/2 h0 + 2 m1) delta' + m0 delta''``."""
    _require(f, 3)
    m0, h0 = mean_jump(f, 0)
    m1, h1 = mean_jump(f, 1)
    m2, _ = mean_jump(f, 2)
    return OracleResult((h1 + m2, -(Q(3, 2) * h0 + 2 * m1), m0), "thm2")


_COROLLARY = ("even-D'", "odd-D'", "even-D''", "odd-D''")


def oracle_corollary(f: PiecewiseModel, which: str) -> OracleResult:
    """Products of the even/odd parts of the model with ``D'`` or ``D''``.

    The mean/jump data are those of ``f`` itself; the even part carries no
    jump in value and the odd part no mean in value.
    """
    if which not in _COROLLARY:
        raise ValueError(f"which must be one of {_COROLLARY}")
    _require(f, 3)
    m0, h0 = mean_jump(f, 0)
    m1, h1 = mean_jump(f, 1)
    m2, _ = mean_jump(f, 2)
    if which == "even-D'":
        c = (Q(0), m0)
    elif which == "odd-D'":
        c = (-(h0 + m1), Q(0))
    elif which == "even-D''":
        c = (h1 + m2, Q(0), m0)
    else:
        c = (Q(0), -(Q(3, 2) * h0 + 2 * m1), Q(0))
    return OracleResult(c, f"corollary {which}")


def corollary_via_parts(f: PiecewiseModel, which: str) -> OracleResult:
    """Same products computed by applying the theorems to the split parts directly."""
    f0, f1 = even_odd_parts(f)
    part = f0 if which.startswith("even") else f1
    return oracle_thm1(part) if which.endswith("D'") else oracle_thm2(part)


FAMILIES = ("plus", "minus", "abs", "abs_sgn")


def oracle_prior(p: int, family: str, order: int) -> OracleResult:
    """Earlier product formulas for the normed powers, stated for the bare product.

    ``order`` is the derivative order of ``D`` and must be ``p + 1`` or
    ``p + 2``. The result has ``order + 1`` coefficients (zero padded).
    """
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}")
    if not isinstance(p, int) or p < 0:
        raise ValueError("p must be a nonnegative integer")
    if order not in (p + 1, p + 2):
        raise ValueError("order must be p + 1 or p + 2")
    if family == "abs" and p % 2 == 0:
        raise ValueError("the |X|^p formulas hold for odd p")
    if family == "abs_sgn" and (p % 2 == 1 or p == 0):
        raise ValueError("the |X|^p sgn x formulas hold for even p >= 2")
    first = order == p + 1
    if family in ("plus", "minus"):
        s = -1 if family == "plus" else 1  # the upper sign of the "-/+" pair
        if first:
            c = [Q(s) ** (p + 1), Q(s) ** (p + 1) * Q(s * (p + 1), 2)]
        else:
            c = [Q(0), Q(s) ** p * Q(s * (2 * p + 3), 2), Q(s) ** p * Q(comb(p + 2, 2), 2)]
    elif family == "abs":
        c = [Q(2), Q(0)] if first else [Q(0), Q(2 * p + 3), Q(0)]
    else:
        c = [Q(-2), Q(0)] if first else [Q(0), -Q(2 * p + 3), Q(0)]
    c += [Q(0)] * (order + 1 - len(c))
    return OracleResult(tuple(c), f"prior {family} p={p} order={order}")


def oracle_classical(f: PiecewiseModel, p: int) -> OracleResult:
    """Leibniz rule ``f delta^(p) = sum_j (-1)^(p-j) C(p, j) f^(p-j)(0) delta^(j)``.

    Only for ``f`` without jumps in its first ``p`` derivatives at 0, where the
    product of a smooth function with ``delta^(p)`` is classical.
    """
    _require(f, p)
    jets = []
    for i in range(p + 1):
        m, h = mean_jump(f, i)
        if h:
            raise OracleInapplicable(f"f^({i}) jumps at 0; the classical rule does not apply")
        jets.append(m)
    c = tuple((-1) ** (p - j) * comb(p, j) * jets[p - j] for j in range(p + 1))
    return OracleResult(c, "classical")
