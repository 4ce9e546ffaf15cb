"""Test functions and sigma schedules for association limits."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from ..exactcalc import (
    PiecewisePolynomial,
    Polynomial,
    Q,
    as_rational,
    evaluate,
)
from ..exactcalc.piecewise import _segment_index
from ..mollifier import build_plateau

PLATEAU_CORE = (Q(-1, 2), Q(1, 2))
PLATEAU_SUPPORT = (Q(-1), Q(1))
PLATEAU_K = 4


@dataclass(frozen=True)
class TestFunction:
    """Compactly supported C^k function with its exact jet at 0."""

    __test__ = False  # not a pytest class

    psi: PiecewisePolynomial
    jet: tuple = field(default=())
    label: str = ""
    core: tuple | None = None

    def __post_init__(self):
        if not self.psi.is_compact:
            raise ValueError("test functions must be compactly supported")

    @classmethod
    def from_function(cls, psi: PiecewisePolynomial, order: int, label: str = "", core=None):
        return cls(psi, _jet(psi, order), label, core)

    def derivative_at_zero(self, i: int) -> Q:
        if i < len(self.jet):
            return self.jet[i]
        return _jet(self.psi, i)[i]

    def __call__(self, x):
        return evaluate(self.psi, x)


def _jet(psi: PiecewisePolynomial, order: int) -> tuple:
    """Derivatives at 0 from the pieces touching 0, so ``order`` may exceed k."""
    i = _segment_index(psi, Q(0), "right")
    right = psi.polys[i]
    left = psi.polys[i - 1] if i > 0 and psi.breaks[i - 1] == 0 else right
    if right is None or left is None:
        raise ValueError("test function is undefined next to 0")
    out = []
    for n in range(order + 1):
        r, lt = right.deriv(n)(0), left.deriv(n)(0)
        if r != lt:
            raise ValueError(f"test function derivative {n} is discontinuous at 0")
        out.append(r.rational())
    return tuple(out)


@lru_cache(maxsize=None)
def plateau(core=PLATEAU_CORE, support=PLATEAU_SUPPORT, k=PLATEAU_K) -> PiecewisePolynomial:
    return build_plateau(core, support, k)


@lru_cache(maxsize=None)
def plateau_test(j: int, core=PLATEAU_CORE, support=PLATEAU_SUPPORT, k=PLATEAU_K) -> TestFunction:
    """``x^j * plateau``: its jet at 0 is ``j!`` in slot ``j`` and zero elsewhere."""
    psi = plateau(core, support, k) * Polynomial.monomial(j)
    return TestFunction.from_function(psi, j, f"x^{j}*plateau", core)


def polynomial_test(coeffs, core=PLATEAU_CORE, support=PLATEAU_SUPPORT, k=PLATEAU_K, order=4) -> TestFunction:
    """``poly(x) * plateau`` for an arbitrary low-to-high coefficient list."""
    poly = Polynomial([as_rational(c) for c in coeffs])
    psi = plateau(core, support, k) * poly
    return TestFunction.from_function(psi, order, "poly*plateau", core)


@dataclass(frozen=True)
class SigmaSchedule:
    sigmas: tuple

    def __post_init__(self):
        sig = tuple(as_rational(s) for s in self.sigmas)
        if len(sig) < 3:
            raise ValueError("a sigma schedule needs at least 3 points")
        if any(s <= 0 for s in sig):
            raise ValueError("sigmas must be positive")
        if any(a <= b for a, b in zip(sig, sig[1:])):
            raise ValueError("sigmas must be strictly decreasing")
        object.__setattr__(self, "sigmas", sig)

    @classmethod
    def dyadic(cls, first: int = 3, last: int = 8) -> "SigmaSchedule":
        return cls(tuple(Q(1, 2**i) for i in range(first, last + 1)))

    @property
    def sigma_max(self) -> Q:
        return self.sigmas[0]

    def __iter__(self):
        return iter(self.sigmas)

    def __len__(self):
        return len(self.sigmas)


DEFAULT_SCHEDULE = SigmaSchedule.dyadic(3, 8)
