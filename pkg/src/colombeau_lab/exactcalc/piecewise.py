"""Exact piecewise-polynomial functions on the real line.

A ``PiecewisePolynomial`` stores strictly increasing rational breakpoints
``b_0 < ... < b_n`` and ``n + 1`` polynomials: ``polys[0]`` lives on
``(-inf, b_0)``, ``polys[i]`` on ``(b_{i-1}, b_i)`` and ``polys[n]`` on
``(b_n, inf)``. An end polynomial may be ``None``, meaning the function is
not known there; the known domain is always a single closed interval.
"""
from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from collections.abc import Iterable, Sequence

from .polynomial import Polynomial
from .rational import Q, ZERO, as_rational, to_string
from .scalar import Scalar, merge_relation

SMOOTH = math.inf
"""Smoothness value for functions with no breakpoint defects (e.g. one polynomial)."""


class DomainError(ValueError):
    """A point or interval lies outside the known domain of a function."""


class DiscontinuityError(ValueError):
    """Classical differentiation was requested across a jump."""


class NotCompactError(ValueError):
    """An operation needs a compactly supported function."""


def _poly(p) -> Polynomial | None:
    if p is None or isinstance(p, Polynomial):
        return p
    return Polynomial(p)


class PiecewisePolynomial:
    __slots__ = ("breaks", "polys", "smoothness", "r")

    def __init__(
        self,
        breaks: Sequence,
        pieces: Sequence,
        head=None,
        tail=None,
        smoothness=-1,
    ):
        breaks = tuple(as_rational(b) for b in breaks)
        if not breaks:
            raise ValueError("at least one breakpoint is required")
        if any(b0 >= b1 for b0, b1 in zip(breaks, breaks[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        pieces = [_poly(p) for p in pieces]
        if len(pieces) != len(breaks) - 1:
            raise ValueError(f"{len(breaks)} breakpoints need {len(breaks) - 1} pieces")
        if any(p is None for p in pieces):
            raise ValueError("interior pieces must be defined")
        polys = (_poly(head), *pieces, _poly(tail))
        if polys[0] is None and polys[-1] is None and len(polys) == 2:
            raise ValueError("empty domain")
        r = None
        for p in polys:
            if p is not None:
                r = merge_relation(r, p.r)
        self.breaks = breaks
        self.polys = polys
        self.smoothness = smoothness
        self.r = r

    @classmethod
    def _make(cls, breaks, polys, smoothness, r=None) -> "PiecewisePolynomial":
        obj = cls.__new__(cls)
        obj.breaks = tuple(breaks)
        obj.polys = tuple(polys)
        obj.smoothness = smoothness
        if r is None:
            for p in obj.polys:
                if p is not None and p.r is not None:
                    r = merge_relation(r, p.r)
        obj.r = r
        return obj

    # constructors ------------------------------------------------------------
    @classmethod
    def compact(cls, breaks, pieces, smoothness=-1) -> "PiecewisePolynomial":
        """Function vanishing outside ``[breaks[0], breaks[-1]]``."""
        return cls(breaks, pieces, Polynomial.zero(), Polynomial.zero(), smoothness)

    @classmethod
    def from_polynomial(cls, poly, at=0) -> "PiecewisePolynomial":
        p = _poly(poly)
        return cls._make((as_rational(at),), (p, p), SMOOTH)

    @classmethod
    def constant(cls, c) -> "PiecewisePolynomial":
        return cls.from_polynomial(Polynomial.constant(c))

    @classmethod
    def zero(cls) -> "PiecewisePolynomial":
        return cls.constant(0)

    # structure ----------------------------------------------------------------
    @property
    def head(self) -> Polynomial | None:
        return self.polys[0]

    @property
    def tail(self) -> Polynomial | None:
        return self.polys[-1]

    @property
    def pieces(self) -> tuple[Polynomial, ...]:
        return self.polys[1:-1]

    @property
    def domain(self) -> tuple[Q | None, Q | None]:
        """``(lo, hi)`` of the known domain; ``None`` marks an infinite end."""
        lo = None if self.polys[0] is not None else self.breaks[0]
        hi = None if self.polys[-1] is not None else self.breaks[-1]
        return lo, hi

    @property
    def is_compact(self) -> bool:
        h, t = self.polys[0], self.polys[-1]
        return h is not None and t is not None and h.is_zero and t.is_zero

    def segments(self):
        """Yield ``(lo, hi, poly)`` for every defined segment (``None`` = infinite)."""
        n = len(self.breaks)
        for i, p in enumerate(self.polys):
            if p is None:
                continue
            lo = self.breaks[i - 1] if i > 0 else None
            hi = self.breaks[i] if i < n else None
            yield lo, hi, p

    def support(self) -> tuple[Q | None, Q | None]:
        """Smallest closed interval outside which the function vanishes."""
        nz = [i for i, p in enumerate(self.polys) if p is not None and not p.is_zero]
        if not nz:
            return ZERO, ZERO
        i0, i1 = nz[0], nz[-1]
        lo = self.breaks[i0 - 1] if i0 > 0 else None
        hi = self.breaks[i1] if i1 < len(self.breaks) else None
        return lo, hi

    def with_smoothness(self, k) -> "PiecewisePolynomial":
        return PiecewisePolynomial._make(self.breaks, self.polys, k, self.r)

    # operator sugar -------------------------------------------------------------
    def __add__(self, other):
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return add(self, _neg_operand(other))

    def __rsub__(self, other):
        return add(scale(self, -1), other)

    def __neg__(self):
        return scale(self, -1)

    def __mul__(self, other):
        return multiply(self, other)

    __rmul__ = __mul__

    def __call__(self, x) -> Scalar:
        return evaluate(self, x)

    def __eq__(self, other):
        if not isinstance(other, PiecewisePolynomial):
            return NotImplemented
        a, b = _normalize(self), _normalize(other)
        return a.breaks == b.breaks and a.polys == b.polys

    def __hash__(self):
        a = _normalize(self)
        return hash((a.breaks, a.polys))

    def __repr__(self):
        lo, hi = self.domain
        return (
            f"PiecewisePolynomial({len(self.pieces)} pieces on "
            f"[{'-inf' if lo is None else to_string(lo)}, "
            f"{'inf' if hi is None else to_string(hi)}], C^{self.smoothness})"
        )


def _neg_operand(other):
    if isinstance(other, PiecewisePolynomial):
        return scale(other, -1)
    return -Scalar.coerce(other)


# ---------------------------------------------------------------------------
# internal helpers
# ---------------------------------------------------------------------------
def _index_maps(breaks_union, items):
    """For each segment of ``breaks_union`` the segment index in every item."""
    out = []
    for p in items:
        idx = [0] + [bisect_right(p.breaks, b) for b in breaks_union]
        out.append(idx)
    return out


def _overlay(items: Sequence[PiecewisePolynomial]):
    breaks = sorted(set().union(*(p.breaks for p in items)))
    maps = _index_maps(breaks, items)
    segs = []
    for s in range(len(breaks) + 1):
        segs.append([p.polys[m[s]] for p, m in zip(items, maps)])
    return breaks, segs


def _normalize(p: PiecewisePolynomial) -> PiecewisePolynomial:
    """Drop redundant undefined ends and merge identical neighbouring pieces."""
    breaks = list(p.breaks)
    polys = list(p.polys)
    while len(polys) > 2 and polys[0] is None and polys[1] is None:
        polys.pop(0)
        breaks.pop(0)
    while len(polys) > 2 and polys[-1] is None and polys[-2] is None:
        polys.pop()
        breaks.pop()
    if all(q is None for q in polys):
        raise DomainError("empty domain")
    if any(q is None for q in polys[1:-1]):
        raise DomainError("known domain is not an interval")
    i = 0
    while i < len(breaks) and len(breaks) > 1:
        left, right = polys[i], polys[i + 1]
        if left is not None and right is not None and left == right:
            del breaks[i]
            del polys[i + 1]
        else:
            i += 1
    if len(breaks) == 1 and polys[0] is not None and polys[0] == polys[1]:
        # one polynomial on the whole line: the leftover break is arbitrary
        breaks = [ZERO]
    return PiecewisePolynomial._make(breaks, polys, p.smoothness, p.r)


def _check_relation(*items):
    r = None
    for it in items:
        r = merge_relation(r, it.r)
    return r


def _combine(items, fn, smoothness):
    _check_relation(*items)
    breaks, segs = _overlay(items)
    polys = [None if any(q is None for q in seg) else fn(*seg) for seg in segs]
    return _normalize(PiecewisePolynomial._make(breaks, polys, smoothness))


def _segment_index(p: PiecewisePolynomial, x, side: str) -> int:
    return bisect_right(p.breaks, x) if side == "right" else bisect_left(p.breaks, x)


# ---------------------------------------------------------------------------
# algebra
# ---------------------------------------------------------------------------
def add(p: PiecewisePolynomial, q) -> PiecewisePolynomial:
    """Pointwise sum with a piecewise polynomial or a scalar."""
    if not isinstance(q, PiecewisePolynomial):
        s = Scalar.coerce(q)
        merge_relation(p.r, s.r)
        polys = [None if a is None else a + s for a in p.polys]
        return _normalize(PiecewisePolynomial._make(p.breaks, polys, p.smoothness))
    return _combine((p, q), lambda a, b: a + b, min(p.smoothness, q.smoothness))


def scale(p: PiecewisePolynomial, c) -> PiecewisePolynomial:
    s = Scalar.coerce(c)
    merge_relation(p.r, s.r)
    polys = [None if a is None else a.scale(s) for a in p.polys]
    return _normalize(PiecewisePolynomial._make(p.breaks, polys, p.smoothness))


def multiply(p: PiecewisePolynomial, q) -> PiecewisePolynomial:
    """Pointwise product with a piecewise polynomial, polynomial or scalar."""
    if isinstance(q, Polynomial):
        q = PiecewisePolynomial.from_polynomial(q)
    if not isinstance(q, PiecewisePolynomial):
        return scale(p, q)
    return _combine((p, q), lambda a, b: a * b, min(p.smoothness, q.smoothness))


def linear_combination(terms: Iterable[tuple[Polynomial, PiecewisePolynomial]], smoothness=-1):
    """``sum(c_i(x) * p_i(x))`` with polynomial multipliers, overlaid once."""
    terms = [(c, p) for c, p in terms if not c.is_zero]
    if not terms:
        return PiecewisePolynomial.zero().with_smoothness(SMOOTH)
    items = [p for _, p in terms]
    _check_relation(*items)
    breaks, segs = _overlay(items)
    polys = []
    for seg in segs:
        if any(q is None for q in seg):
            polys.append(None)
            continue
        acc = Polynomial.zero()
        for (c, _), q in zip(terms, seg):
            if not q.is_zero:
                acc = acc + c * q
        polys.append(acc)
    return _normalize(PiecewisePolynomial._make(breaks, polys, smoothness))


# ---------------------------------------------------------------------------
# calculus
# ---------------------------------------------------------------------------
def differentiate(p: PiecewisePolynomial, n: int = 1) -> PiecewisePolynomial:
    """Classical piecewise derivative.

    Raises ``DiscontinuityError`` when the function jumps at a breakpoint:
    the distributional derivative would carry delta terms that are not
    representable here.
    """
    for _ in range(n):
        if p.smoothness < 0 and not smoothness_check(p, 0):
            raise DiscontinuityError("function jumps at a breakpoint; derivative has delta terms")
        polys = [None if a is None else a.deriv() for a in p.polys]
        k = max(p.smoothness - 1, -1)
        p = _normalize(PiecewisePolynomial._make(p.breaks, polys, k, p.r))
    return p


def antiderivative(p: PiecewisePolynomial, anchor=0) -> PiecewisePolynomial:
    """Continuous antiderivative vanishing at ``anchor``."""
    anchor = as_rational(anchor)
    _require_point(p, anchor)
    ants = [None if a is None else a.antideriv() for a in p.polys]
    n = len(p.breaks)
    j = _segment_index(p, anchor, "right")
    if ants[j] is None:
        j -= 1
    consts: list = [None] * (n + 1)
    consts[j] = -ants[j](anchor)
    for i in range(j + 1, n + 1):
        if ants[i] is None:
            break
        b = p.breaks[i - 1]
        consts[i] = ants[i - 1](b) + consts[i - 1] - ants[i](b)
    for i in range(j - 1, -1, -1):
        if ants[i] is None:
            break
        b = p.breaks[i]
        consts[i] = ants[i + 1](b) + consts[i + 1] - ants[i](b)
    polys = [None if a is None else a + c for a, c in zip(ants, consts)]
    return _normalize(PiecewisePolynomial._make(p.breaks, polys, p.smoothness + 1, p.r))


def integrate(p: PiecewisePolynomial, a=None, b=None) -> Scalar:
    """Exact definite integral over ``[a, b]``.

    An omitted limit defaults to the end of the support; this needs the
    corresponding end piece to vanish.
    """
    lo_s, hi_s = p.support()
    if a is None:
        if lo_s is None:
            raise NotCompactError("lower limit required: function does not vanish at -inf")
        a = lo_s
    if b is None:
        if hi_s is None:
            raise NotCompactError("upper limit required: function does not vanish at +inf")
        b = hi_s
    a, b = as_rational(a), as_rational(b)
    if a > b:
        raise ValueError("integration limits must satisfy a <= b")
    _require_interval(p, a, b)
    total = Scalar(0, 0, p.r)
    for lo, hi, poly in p.segments():
        x0 = a if lo is None else max(lo, a)
        x1 = b if hi is None else min(hi, b)
        if x0 >= x1 or poly.is_zero:
            continue
        P = poly.antideriv()
        total = total + (P(x1) - P(x0))
    return total


# ---------------------------------------------------------------------------
# geometry
# ---------------------------------------------------------------------------
def reflect(p: PiecewisePolynomial) -> PiecewisePolynomial:
    """``x -> p(-x)``."""
    breaks = [-b for b in reversed(p.breaks)]
    polys = [None if a is None else a.reflect() for a in reversed(p.polys)]
    return PiecewisePolynomial._make(breaks, polys, p.smoothness, p.r)


def translate(p: PiecewisePolynomial, c) -> PiecewisePolynomial:
    """``x -> p(x - c)``: moves the graph right by ``c``."""
    c = as_rational(c)
    breaks = [b + c for b in p.breaks]
    polys = [None if a is None else a.shift(-c) for a in p.polys]
    return PiecewisePolynomial._make(breaks, polys, p.smoothness, p.r)


def scale_net(p: PiecewisePolynomial, sigma) -> PiecewisePolynomial:
    """``x -> p(x / sigma) / sigma``; preserves the total integral."""
    sigma = as_rational(sigma)
    if sigma <= 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    inv = 1 / sigma
    breaks = [b * sigma for b in p.breaks]
    polys = [None if a is None else a.dilate(inv).scale(inv) for a in p.polys]
    return PiecewisePolynomial._make(breaks, polys, p.smoothness, p.r)


def restrict(p: PiecewisePolynomial, lo=None, hi=None) -> PiecewisePolynomial:
    """Forget everything outside ``[lo, hi]`` (``None`` keeps that end unbounded)."""
    lo = None if lo is None else as_rational(lo)
    hi = None if hi is None else as_rational(hi)
    if lo is not None and hi is not None and lo >= hi:
        raise ValueError("restriction window must have lo < hi")
    _require_interval(p, lo, hi)
    inner = [b for b in p.breaks if (lo is None or b > lo) and (hi is None or b < hi)]
    breaks = ([lo] if lo is not None else []) + inner + ([hi] if hi is not None else [])
    if not breaks:
        return p
    polys = []
    for s in range(len(breaks) + 1):
        if s == 0:
            polys.append(p.polys[0] if lo is None else None)
        elif s == len(breaks):
            polys.append(p.polys[-1] if hi is None else None)
        else:
            polys.append(p.polys[bisect_right(p.breaks, breaks[s - 1])])
    return _normalize(PiecewisePolynomial._make(breaks, polys, p.smoothness, p.r))


def extend_by_zero(p: PiecewisePolynomial) -> PiecewisePolynomial:
    """Declare the function zero beyond its known domain where it already ends in zero."""
    polys = list(p.polys)
    if polys[0] is None and len(polys) > 2 and polys[1].is_zero:
        polys[0] = Polynomial.zero()
    if polys[-1] is None and len(polys) > 2 and polys[-2].is_zero:
        polys[-1] = Polynomial.zero()
    return _normalize(PiecewisePolynomial._make(p.breaks, polys, p.smoothness, p.r))


# ---------------------------------------------------------------------------
# evaluation and checks
# ---------------------------------------------------------------------------
def evaluate(p: PiecewisePolynomial, x, side: str = "right") -> Scalar:
    """Value at ``x``; at a breakpoint ``side`` picks the right or left piece."""
    if side not in ("right", "left"):
        raise ValueError("side must be 'right' or 'left'")
    x = as_rational(x)
    i = _segment_index(p, x, side)
    poly = p.polys[i]
    if poly is None:
        # closed domain end: fall back to the only adjacent piece
        if side == "right" and i > 0 and p.breaks[i - 1] == x:
            poly = p.polys[i - 1]
        elif side == "left" and i < len(p.breaks) and p.breaks[i] == x:
            poly = p.polys[i + 1]
    if poly is None:
        raise DomainError(f"x = {to_string(x)} is outside the known domain")
    return poly(x)


def smoothness_check(p: PiecewisePolynomial, k: int) -> bool:
    """Exact C^k test: derivatives 0..k agree across every breakpoint."""
    for i, b in enumerate(p.breaks):
        left, right = p.polys[i], p.polys[i + 1]
        if left is None or right is None:
            continue
        dl, dr = left, right
        for _ in range(k + 1):
            if dl(b) != dr(b):
                return False
            dl, dr = dl.deriv(), dr.deriv()
    return True


def certify(p: PiecewisePolynomial, kmax: int = 64) -> PiecewisePolynomial:
    """Copy of ``p`` whose smoothness is the largest verified order up to ``kmax``."""
    k = -1
    while k < kmax and smoothness_check(p, k + 1):
        k += 1
    if k == kmax and all(
        left is None or right is None or left == right for left, right in zip(p.polys, p.polys[1:])
    ):
        k = SMOOTH
    return p.with_smoothness(max(k, p.smoothness) if p.smoothness != SMOOTH else p.smoothness)


def _require_point(p, x):
    lo, hi = p.domain
    if (lo is not None and x < lo) or (hi is not None and x > hi):
        raise DomainError(f"{to_string(x)} is outside the known domain")


def _require_interval(p, a, b):
    lo, hi = p.domain
    if (lo is not None and (a is None or a < lo)) or (hi is not None and (b is None or b > hi)):
        raise DomainError("interval exceeds the known domain")


# ---------------------------------------------------------------------------
# convolution
# ---------------------------------------------------------------------------
def _moment_primitives(q: PiecewisePolynomial, kmax: int):
    """``M_k(t) = int_{-inf}^t s^k q(s) ds`` for ``k = 0..kmax``."""
    out = []
    start = q.breaks[0]
    for k in range(kmax + 1):
        weighted = multiply(q, Polynomial.monomial(k))
        out.append(antiderivative(weighted, start))
    return out


def convolve(p: PiecewisePolynomial, q: PiecewisePolynomial, window=None) -> PiecewisePolynomial:
    """Exact ``(p * q)(x) = int p(y) q(x - y) dy`` on ``window``.

    ``q`` must be compactly supported. On each piece ``P`` of ``p`` over
    ``(a, b)`` the Taylor expansion ``P(x - t) = sum_k P^(k)(x) (-t)^k / k!``
    turns the integral into shifted moment primitives of ``q``:
    ``sum_k (-1)^k P^(k)(x)/k! [M_k(x - a) - M_k(x - b)]``.
    Jump-carrying ``p`` is fine; the result inherits the smoothness of ``q``.
    """
    if not q.is_compact:
        raise NotCompactError("the second convolution factor must be compactly supported")
    _check_relation(p, q)
    ql, qh = q.breaks[0], q.breaks[-1]
    plo, phi = p.domain
    vlo = None if plo is None else plo + qh
    vhi = None if phi is None else phi + ql
    if window is None:
        wlo, whi = vlo, vhi
    else:
        wlo, whi = (None if w is None else as_rational(w) for w in window)
        if (vlo is not None and (wlo is None or wlo < vlo)) or (
            vhi is not None and (whi is None or whi > vhi)
        ):
            raise DomainError("window exceeds the region where p * q is determined by p")
    src = restrict(
        p,
        None if wlo is None else wlo - qh,
        None if whi is None else whi - ql,
    )
    segs = list(src.segments())
    kmax = max((poly.degree for _, _, poly in segs), default=0)
    kmax = max(kmax, 0)
    moments = _moment_primitives(q, kmax)
    totals = [m.polys[-1] for m in moments]
    fact = [Q(math.factorial(k)) for k in range(kmax + 1)]

    def taylor_coeffs(poly):
        return [poly.deriv(k).scale(Q((-1) ** k) / fact[k]) for k in range(kmax + 1)]

    terms = []
    constant_part = Polynomial.zero()
    # left boundary of the first segment
    lo0, _, P0 = segs[0]
    c0 = taylor_coeffs(P0)
    if lo0 is None:
        for k in range(kmax + 1):
            constant_part = constant_part + c0[k] * totals[k]
    else:
        for k in range(kmax + 1):
            terms.append((c0[k], translate(moments[k], lo0)))
    # interior boundaries: coefficient jump between neighbouring pieces
    prev = c0
    for lo, hi, P in segs[1:]:
        cur = taylor_coeffs(P)
        for k in range(kmax + 1):
            d = cur[k] - prev[k]
            if not d.is_zero:
                terms.append((d, translate(moments[k], lo)))
        prev = cur
    _, hi_last, _ = segs[-1]
    if hi_last is not None:
        for k in range(kmax + 1):
            terms.append((-prev[k], translate(moments[k], hi_last)))
    if not constant_part.is_zero:
        terms.append((constant_part, PiecewisePolynomial.constant(1)))
    k_out = p.smoothness + q.smoothness + 2
    out = linear_combination(terms, k_out)
    if wlo is None and whi is None:
        return out
    return restrict(out, wlo, whi).with_smoothness(k_out)
