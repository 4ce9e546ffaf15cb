"""Functions with a first-order discontinuity at 0 and their mollified models.

A :class:`PiecewiseModel` is a pair of piecewise polynomials, one on
``(-inf, 0]`` and one on ``[0, inf)``. Its model at scale ``sigma`` is the
exact convolution ``F_sigma = f * D_sigma`` on a finite window.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .exactcalc import (
    PiecewisePolynomial,
    Polynomial,
    Q,
    as_rational,
    convolve,
    differentiate,
    reflect,
    to_string,
)
from .exactcalc.piecewise import _normalize
from .mollifier import Mollifier, scaled_instance

DEFAULT_CLASS_ORDER = 4


class ModelSpecError(ValueError):
    """A model name or inline model description could not be resolved."""


@dataclass(frozen=True)
class PiecewiseModel:
    """A function of class C_d^kd: smooth on each half-line, jumps allowed at 0."""

    left: PiecewisePolynomial
    right: PiecewisePolynomial
    kd: int = DEFAULT_CLASS_ORDER
    name: str = ""

    def __post_init__(self):
        if self.left.domain != (None, 0):
            raise ValueError("left part must be defined exactly on (-inf, 0]")
        if self.right.domain != (0, None):
            raise ValueError("right part must be defined exactly on [0, inf)")
        if self.kd < 0:
            raise ValueError("class order must be nonnegative")

    @classmethod
    def from_polynomials(cls, left, right, kd=DEFAULT_CLASS_ORDER, name="") -> "PiecewiseModel":
        lp = left if isinstance(left, Polynomial) else Polynomial(left)
        rp = right if isinstance(right, Polynomial) else Polynomial(right)
        return cls(
            PiecewisePolynomial([0], [], head=lp, tail=None),
            PiecewisePolynomial([0], [], head=None, tail=rp),
            kd,
            name,
        )

    @classmethod
    def from_jets(cls, left_jet, right_jet, kd=None, name="") -> "PiecewiseModel":
        """Polynomial halves with prescribed one-sided derivatives at 0."""
        lp = [as_rational(v) / math.factorial(i) for i, v in enumerate(left_jet)]
        rp = [as_rational(v) / math.factorial(i) for i, v in enumerate(right_jet)]
        if kd is None:
            kd = max(DEFAULT_CLASS_ORDER, len(lp), len(rp))
        return cls.from_polynomials(lp, rp, kd, name)

    @property
    def function(self) -> PiecewisePolynomial:
        """The whole-line function (value at 0 is taken from the right)."""
        breaks = self.left.breaks + self.right.breaks[1:]
        polys = self.left.polys[:-1] + self.right.polys[1:]
        return _normalize(PiecewisePolynomial._make(breaks, polys, -1))

    def jet(self, i: int, side: str) -> Q:
        """``f^(i)(0-)`` for ``side='left'``, ``f^(i)(0+)`` for ``side='right'``."""
        piece = self.left.polys[-2] if side == "left" else self.right.polys[1]
        return piece.deriv(i)(0).rational()

    def reflected(self) -> "PiecewiseModel":
        """``x -> f(-x)``."""
        return PiecewiseModel(reflect(self.right), reflect(self.left), self.kd, self.name and f"{self.name}(-x)")

    # linear structure --------------------------------------------------------
    def __add__(self, other: "PiecewiseModel") -> "PiecewiseModel":
        return PiecewiseModel(
            self.left + other.left, self.right + other.right, min(self.kd, other.kd)
        )

    def __sub__(self, other: "PiecewiseModel") -> "PiecewiseModel":
        return self + other * -1

    def __mul__(self, c) -> "PiecewiseModel":
        c = as_rational(c)
        return PiecewiseModel(self.left * c, self.right * c, self.kd)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __repr__(self):
        return f"PiecewiseModel({self.name or '<anonymous>'}, kd={self.kd})"


def mean_jump(f: PiecewiseModel, i: int) -> tuple[Q, Q]:
    """``(m_i, h_i)``: mean and jump of ``f^(i)`` at 0."""
    if i < 0 or i > f.kd:
        raise ValueError(f"order {i} is beyond the declared class order {f.kd}")
    lo, hi = f.jet(i, "left"), f.jet(i, "right")
    return (lo + hi) / 2, hi - lo


def even_odd_parts(f: PiecewiseModel) -> tuple[PiecewiseModel, PiecewiseModel]:
    fr = f.reflected()
    half = Q(1, 2)
    return (f + fr) * half, (f - fr) * half


# ---------------------------------------------------------------------------
# built-in singular functions (integer exponents)
# ---------------------------------------------------------------------------
def _check_power(p):
    if not isinstance(p, int) or p < 0:
        raise ValueError(f"exponent must be a nonnegative integer, got {p!r}")


def nu_plus(p: int) -> PiecewiseModel:
    """``x^p / p!`` for ``x > 0``, zero for ``x < 0``."""
    _check_power(p)
    return PiecewiseModel.from_polynomials([], Polynomial.monomial(p, Q(1, math.factorial(p))), name=f"nu_plus:{p}")


def nu_minus(p: int) -> PiecewiseModel:
    """``(-x)^p / p!`` for ``x < 0``, zero for ``x > 0``."""
    _check_power(p)
    c = Q((-1) ** p, math.factorial(p))
    return PiecewiseModel.from_polynomials(Polynomial.monomial(p, c), [], name=f"nu_minus:{p}")


def heaviside() -> PiecewiseModel:
    """Unit step: 1 for ``x > 0``, 0 for ``x < 0``."""
    f = nu_plus(0)
    return PiecewiseModel(f.left, f.right, f.kd, "heaviside")


def abs_nu(p: int) -> PiecewiseModel:
    f = nu_plus(p) + nu_minus(p)
    return PiecewiseModel(f.left, f.right, f.kd, f"abs_nu:{p}")


def abs_nu_sgn(p: int) -> PiecewiseModel:
    f = nu_plus(p) - nu_minus(p)
    return PiecewiseModel(f.left, f.right, f.kd, f"abs_nu_sgn:{p}")


def sgn() -> PiecewiseModel:
    f = abs_nu_sgn(0)
    return PiecewiseModel(f.left, f.right, f.kd, "sgn")


def constant(c) -> PiecewiseModel:
    c = as_rational(c)
    return PiecewiseModel.from_polynomials([c], [c], name=f"const:{to_string(c)}")


def polynomial_model(coeffs) -> PiecewiseModel:
    """A function smooth across 0, given by low-to-high coefficients."""
    cs = [as_rational(c) for c in coeffs]
    return PiecewiseModel.from_polynomials(cs, cs, name="poly:" + ",".join(to_string(c) for c in cs))


FAMILIES = {"plus": nu_plus, "minus": nu_minus, "abs": abs_nu, "abs_sgn": abs_nu_sgn}

_NAMED = {
    "heaviside": heaviside,
    "sgn": sgn,
    "nu_plus": nu_plus,
    "nu_minus": nu_minus,
    "abs_nu": abs_nu,
    "abs_nu_sgn": abs_nu_sgn,
}


def parse_model(spec) -> PiecewiseModel:
    """Resolve ``"heaviside"``, ``"nu_plus:2"``, ``"const:1/2"``, ``"poly:1,0,3"``
    or an inline mapping ``{"left": [...], "right": [...], "kd": 4}``."""
    if isinstance(spec, dict):
        if "model" in spec:
            return parse_model(spec["model"])
        try:
            return PiecewiseModel.from_polynomials(
                [as_rational(c) for c in spec["left"]],
                [as_rational(c) for c in spec["right"]],
                int(spec.get("kd", DEFAULT_CLASS_ORDER)),
                spec.get("name", "inline"),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ModelSpecError(f"bad inline model: {exc}") from exc
    name, _, arg = str(spec).partition(":")
    try:
        if name in ("heaviside", "sgn"):
            if arg:
                raise ModelSpecError(f"{name} takes no argument")
            return _NAMED[name]()
        if name in _NAMED:
            return _NAMED[name](int(arg))
        if name == "const":
            return constant(arg)
        if name == "poly":
            return polynomial_model(arg.split(","))
    except ModelSpecError:
        raise
    except (TypeError, ValueError) as exc:
        raise ModelSpecError(f"bad model spec {spec!r}: {exc}") from exc
    raise ModelSpecError(f"unknown model {spec!r}")


def load_model(path) -> PiecewiseModel:
    with open(path) as fh:
        return parse_model(json.load(fh))


# ---------------------------------------------------------------------------
# mollified models
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class ModelInstance:
    source: PiecewiseModel
    mollifier: Mollifier
    sigma: Q
    window: Q
    F: PiecewisePolynomial


def model(f: PiecewiseModel, m: Mollifier, sigma, W) -> ModelInstance:
    """``F_sigma = f * D_sigma`` exactly on ``[-W, W]``."""
    sigma, W = as_rational(sigma), as_rational(W)
    if sigma <= 0 or W <= 0:
        raise ValueError("sigma and the window half-width must be positive")
    F = convolve(f.function, scaled_instance(m, sigma), window=(-W, W))
    return ModelInstance(f, m, sigma, W, F)


_DERIVATIVE_RULES = {
    # family -> (family of the derivative, sign)
    "plus": ("plus", 1),
    "minus": ("minus", -1),
    "abs": ("abs_sgn", 1),
    "abs_sgn": ("abs", 1),
}


def derivative_consistency(family: str, m: Mollifier, sigma, p: int, W=None) -> bool:
    """Exact check of ``d/dx (X^p model) = sign * (derivative-family X^(p-1) model)``."""
    if p < 1:
        raise ValueError("p must be >= 1")
    sigma = as_rational(sigma)
    W = 4 * sigma * m.radius if W is None else as_rational(W)
    target, sign = _DERIVATIVE_RULES[family]
    lhs = differentiate(model(FAMILIES[family](p), m, sigma, W).F)
    rhs = model(FAMILIES[target](p - 1), m, sigma, W).F * sign
    return lhs == rhs
