"""Moment-constrained bumps and the delta-modelling mollifier ``D(s, x) = f + lam_s g``.

All objects are exact. ``lam_s`` is never evaluated: an instance records the
relation ``lam**2 = r`` with ``r = (s - int f^2) / int g^2``, which is negative
for the small ``s`` that matter, so ``D`` is complex-valued there.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .exactcalc import (
    ONE,
    PiecewisePolynomial,
    Polynomial,
    Q,
    Scalar,
    antiderivative,
    as_rational,
    differentiate,
    integrate,
    reflect,
    scale_net,
    smoothness_check,
    to_string,
)
from .exactcalc.linalg import SingularMatrixError, solve
from .exactcalc.piecewise import _overlay

DESCRIPTION_FORMAT = "colombeau-lab/mollifier/1"


class MollifierError(ValueError):
    """A candidate (f, g) pair violates a structural requirement."""


class SingularMomentSystem(ValueError):
    """The linear system for the bump multiplier has no unique solution."""


@dataclass(frozen=True)
class BumpSpec:
    """Support interval, smoothness order and ``(j, value)`` moment constraints."""

    support: tuple
    k: int
    moments: tuple = ((0, ONE),)

    def __post_init__(self):
        a, b = (as_rational(x) for x in self.support)
        if a >= b:
            raise ValueError("bump support must be a nondegenerate interval")
        object.__setattr__(self, "support", (a, b))
        moments = tuple((int(j), as_rational(v)) for j, v in self.moments)
        orders = [j for j, _ in moments]
        if len(set(orders)) != len(orders):
            raise ValueError("moment constraints must have distinct orders")
        if any(j < 0 for j in orders):
            raise ValueError("moment orders must be nonnegative")
        if self.k < -1:
            raise ValueError("smoothness order must be >= -1")
        object.__setattr__(self, "moments", moments)


def _base_shape(a, b, k) -> Polynomial:
    """``(1 - t^2)^(k+1)`` with ``t = (2x - a - b) / (b - a)``, as a polynomial in x."""
    c = (a + b) / 2
    h = (b - a) / 2
    in_t = Polynomial([1, 0, -1]) ** (k + 1)
    return in_t.shift(-c / h).dilate(1 / h)


def build_bump(spec: BumpSpec) -> PiecewisePolynomial:
    """C^k bump on ``spec.support`` meeting every moment constraint exactly.

    The shape is ``(1 - t^2)^(k+1)`` times a multiplier ``sum c_j x^j`` over
    the constrained orders ``j``. With a nonnegative base weight the system
    matrix is a principal block of a positive definite Hankel matrix.
    """
    a, b = spec.support
    base = _base_shape(a, b, spec.k)
    orders = [j for j, _ in spec.moments]
    basis = [base * Polynomial.monomial(j) for j in orders]
    A = []
    for j in orders:
        xj = Polynomial.monomial(j)
        A.append([(xj * bi).integrate(a, b).rational() for bi in basis])
    try:
        coeffs = solve(A, [v for _, v in spec.moments])
    except SingularMatrixError as exc:
        raise SingularMomentSystem(str(exc)) from exc
    shape = Polynomial.zero()
    for c, bi in zip(coeffs, basis):
        shape = shape + bi.scale(c)
    return PiecewisePolynomial.compact((a, b), [shape], smoothness=spec.k)


def build_plateau(core, support, k: int) -> PiecewisePolynomial:
    """C^k function equal to 1 on ``core`` and 0 outside ``support``."""
    c0, c1 = (as_rational(x) for x in core)
    s0, s1 = (as_rational(x) for x in support)
    if not (s0 < c0 <= c1 < s1):
        raise ValueError("plateau core must lie strictly inside its support")
    if k < 0:
        raise ValueError("plateau smoothness must be >= 0")
    rise = antiderivative(build_bump(BumpSpec((s0, c0), k - 1)), s0)
    fall = antiderivative(build_bump(BumpSpec((c1, s1), k - 1)), c1)
    return (rise - fall).with_smoothness(k)


# ---------------------------------------------------------------------------
# mollifier
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class Mollifier:
    f: PiecewisePolynomial
    g: PiecewisePolynomial
    k: int
    F2: Q
    G2: Q
    radius: Q
    description: dict | None = field(default=None, compare=False, repr=False)
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def cached(self, key, build):
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = build()
            return value


def _radius(p: PiecewisePolynomial) -> Q:
    lo, hi = p.support()
    return max(abs(lo), abs(hi))


def make_mollifier(f: PiecewisePolynomial, g: PiecewisePolynomial, k: int, description=None) -> Mollifier:
    """Validate ``(f, g)`` and cache ``int f^2``, ``int g^2`` and the support radius."""
    for name, p in (("f", f), ("g", g)):
        if not p.is_compact:
            raise MollifierError(f"{name} must be compactly supported")
        if p.r is not None and any(not q.is_rational for q in p.polys):
            raise MollifierError(f"{name} must be real-valued")
        if reflect(p) != p:
            raise MollifierError(f"{name} must be even")
        if not smoothness_check(p, k):
            raise MollifierError(f"{name} is not C^{k}")
    if k < 2:
        raise MollifierError("mollifier smoothness must be at least 2")
    _, segs = _overlay((f, g))
    if any(not a.is_zero and not b.is_zero for a, b in segs):
        raise MollifierError("f and g must have disjoint supports")
    if integrate(f) != 1:
        raise MollifierError(f"int f must be 1, got {integrate(f)}")
    if integrate(g) != 0:
        raise MollifierError(f"int g must be 0, got {integrate(g)}")
    G2 = integrate(g * g).rational()
    if not G2:
        raise MollifierError("g must not vanish identically")
    F2 = integrate(f * f).rational()
    return Mollifier(
        f=f.with_smoothness(k),
        g=g.with_smoothness(k),
        k=k,
        F2=F2,
        G2=G2,
        radius=max(_radius(f), _radius(g)),
        description=description,
    )


@dataclass(frozen=True)
class MollifierInstance:
    """``D(s, .) = f + lam g`` at one parameter value, with ``lam**2 = r``."""

    parent: Mollifier | None
    s: Q
    r: Q
    D: PiecewisePolynomial
    degenerate: bool = False


def instantiate(m: Mollifier, s) -> MollifierInstance:
    s = as_rational(s)
    if s <= 0:
        raise ValueError("the parameter s must be positive")

    def build():
        r = (s - m.F2) / m.G2
        if not r:
            return MollifierInstance(m, s, r, m.f, degenerate=True)
        D = (m.f + m.g * Scalar.lam(r)).with_smoothness(m.k)
        return MollifierInstance(m, s, r, D)

    return m.cached(("instance", s), build)


def scaled_instance(m: Mollifier, sigma) -> PiecewisePolynomial:
    """The net ``D_sigma(x) = D(sigma, x / sigma) / sigma``."""
    sigma = as_rational(sigma)
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    return m.cached(("net", sigma), lambda: scale_net(instantiate(m, sigma).D, sigma))


def derivative_net(m: Mollifier, sigma, p: int) -> PiecewisePolynomial:
    """``p``-th derivative of ``D_sigma``; needs ``p <= k - 1``."""
    if p < 0:
        raise ValueError("derivative order must be nonnegative")
    if p > m.k - 1:
        raise MollifierError(f"derivative order {p} exceeds the smoothness budget k - 1 = {m.k - 1}")
    sigma = as_rational(sigma)
    if p == 0:
        return scaled_instance(m, sigma)
    return m.cached(("deriv", sigma, p), lambda: differentiate(derivative_net(m, sigma, p - 1)))


@dataclass
class ConditionReport:
    checks: dict

    @property
    def passed(self) -> bool:
        return all(ok for _, _, ok in self.checks.values())


def verify_conditions(inst: MollifierInstance) -> ConditionReport:
    """Evenness, unit mass and ``int D^2 = s``, all with zero tolerance."""
    D = inst.D
    mass = integrate(D)
    energy = integrate(D * D)
    checks = {
        "even": ("D(-x) = D(x)", "symmetric" if reflect(D) == D else "asymmetric", reflect(D) == D),
        "mass": ("1", str(mass), mass == 1),
        "energy": (to_string(inst.s), str(energy), energy == inst.s),
    }
    return ConditionReport(checks)


# ---------------------------------------------------------------------------
# descriptions
# ---------------------------------------------------------------------------
def _term_function(term: dict, k: int) -> PiecewisePolynomial:
    spec = BumpSpec(
        tuple(term["support"]),
        int(term.get("k", k)),
        tuple((j, v) for j, v in term.get("moments", [[0, "1"]])),
    )
    bump = build_bump(spec) * as_rational(term.get("weight", "1"))
    if term.get("mirror"):
        bump = bump + reflect(bump)
    return bump


def _sum_terms(terms, k):
    out = PiecewisePolynomial.compact((0, 1), [Polynomial.zero()])
    for t in terms:
        out = out + _term_function(t, k)
    return out


def from_description(desc: dict) -> Mollifier:
    if desc.get("format", DESCRIPTION_FORMAT) != DESCRIPTION_FORMAT:
        raise ValueError(f"unsupported mollifier format {desc.get('format')!r}")
    k = int(desc["k"])
    f = _sum_terms(desc["f"], k)
    g = _sum_terms(desc["g"], k)
    return make_mollifier(f, g, k, description=_canonical(desc))


def _canonical(desc: dict) -> dict:
    def term(t):
        out = {
            "support": [to_string(as_rational(x)) for x in t["support"]],
            "weight": to_string(as_rational(t.get("weight", "1"))),
            "moments": [[int(j), to_string(as_rational(v))] for j, v in t.get("moments", [[0, "1"]])],
            "mirror": bool(t.get("mirror", False)),
        }
        if "k" in t:
            out["k"] = int(t["k"])
        return out

    return {
        "format": DESCRIPTION_FORMAT,
        "k": int(desc["k"]),
        "f": [term(t) for t in desc["f"]],
        "g": [term(t) for t in desc["g"]],
    }


def dumps_description(m: Mollifier) -> str:
    if m.description is None:
        raise ValueError("mollifier was not built from a description")
    return json.dumps(m.description, indent=2, sort_keys=True)


def loads_description(text: str) -> Mollifier:
    return from_description(json.loads(text))


def default_description(k: int = 6) -> dict:
    return {
        "format": DESCRIPTION_FORMAT,
        "k": k,
        "f": [{"support": ["-1/4", "1/4"], "weight": "1"}],
        "g": [
            {"support": ["3/8", "5/8"], "weight": "1/2", "mirror": True},
            {"support": ["11/16", "15/16"], "weight": "-1/2", "mirror": True},
        ],
    }


def alternative_description(k: int = 4) -> dict:
    """Wider, sign-changing f (zero second moment) and a wider g, at lower k."""
    return {
        "format": DESCRIPTION_FORMAT,
        "k": k,
        "f": [{"support": ["-1/2", "1/2"], "weight": "1", "moments": [[0, "1"], [2, "0"]]}],
        "g": [
            {"support": ["5/8", "7/8"], "weight": "1", "mirror": True},
            {"support": ["1", "3/2"], "weight": "-1", "mirror": True},
        ],
    }


def default_mollifier(k: int = 6) -> Mollifier:
    return from_description(default_description(k))


def alternative_mollifier(k: int = 4) -> Mollifier:
    return from_description(alternative_description(k))


__all__ = [
    "BumpSpec",
    "ConditionReport",
    "Mollifier",
    "MollifierError",
    "MollifierInstance",
    "SingularMomentSystem",
    "alternative_description",
    "alternative_mollifier",
    "build_bump",
    "build_plateau",
    "default_description",
    "default_mollifier",
    "derivative_net",
    "dumps_description",
    "from_description",
    "instantiate",
    "loads_description",
    "make_mollifier",
    "scaled_instance",
    "verify_conditions",
]
