"""Polynomials with coefficients in Q(lam), lam**2 = r.

Storage is split: ``re`` holds the rational parts of the coefficients and
``lam`` the lam-parts, both as trimmed tuples. Pure rational polynomials have
an empty ``lam`` and usually ``r is None``.
"""
from __future__ import annotations

from . import kernels as K
from .rational import Q, ZERO, as_rational
from .scalar import Scalar, merge_relation


class Polynomial:
    __slots__ = ("re", "lam", "r")

    def __init__(self, coeffs=(), r=None):
        re, lam = [], []
        for c in coeffs:
            s = Scalar.coerce(c)
            r = merge_relation(r, s.r)
            re.append(s.a)
            lam.append(s.b)
        self.re = K.trim(re)
        self.lam = K.trim(lam)
        self.r = None if r is None else as_rational(r)

    @classmethod
    def _make(cls, re, lam=(), r=None) -> "Polynomial":
        p = cls.__new__(cls)
        p.re = re
        p.lam = lam
        p.r = r
        return p

    @classmethod
    def zero(cls, r=None) -> "Polynomial":
        return cls._make((), (), r)

    @classmethod
    def constant(cls, c) -> "Polynomial":
        s = Scalar.coerce(c)
        return cls._make(K.trim((s.a,)), K.trim((s.b,)), s.r)

    @classmethod
    def monomial(cls, n: int, c=1) -> "Polynomial":
        s = Scalar.coerce(c)
        pad = (ZERO,) * n
        return cls._make(K.trim(pad + (s.a,)), K.trim(pad + (s.b,)), s.r)

    # structure -------------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return max(len(self.re), len(self.lam)) - 1

    @property
    def coeffs(self) -> tuple[Scalar, ...]:
        n = self.degree + 1
        re = self.re + (ZERO,) * (n - len(self.re))
        lam = self.lam + (ZERO,) * (n - len(self.lam))
        return tuple(Scalar(a, b, self.r if b else None) for a, b in zip(re, lam))

    @property
    def is_zero(self) -> bool:
        return not self.re and not self.lam

    @property
    def is_rational(self) -> bool:
        return not self.lam

    # arithmetic --------------------------------------------------------------
    def __add__(self, other):
        o = _poly_operand(other)
        if o is NotImplemented:
            return o
        r = merge_relation(self.r, o.r)
        return Polynomial._make(K.add(self.re, o.re), K.add(self.lam, o.lam), r)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._make(K.scale(self.re, Q(-1)), K.scale(self.lam, Q(-1)), self.r)

    def __sub__(self, other):
        o = _poly_operand(other)
        if o is NotImplemented:
            return o
        r = merge_relation(self.r, o.r)
        return Polynomial._make(K.sub(self.re, o.re), K.sub(self.lam, o.lam), r)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return self._mul_poly(other)
        s = _scalar_operand(other)
        if s is NotImplemented:
            return s
        return self.scale(s)

    __rmul__ = __mul__

    def _mul_poly(self, o: "Polynomial") -> "Polynomial":
        r = merge_relation(self.r, o.r)
        re = K.mul(self.re, o.re)
        if self.lam and o.lam:
            re = K.add(re, K.scale(K.mul(self.lam, o.lam), r))
        lam = ()
        if o.lam:
            lam = K.mul(self.re, o.lam)
        if self.lam:
            lam = K.add(lam, K.mul(self.lam, o.re))
        return Polynomial._make(re, lam, r)

    def scale(self, c) -> "Polynomial":
        s = Scalar.coerce(c)
        r = merge_relation(self.r, s.r)
        re = K.scale(self.re, s.a)
        lam = K.scale(self.lam, s.a)
        if s.b:
            re = K.add(re, K.scale(self.lam, s.b * r))
            lam = K.add(lam, K.scale(self.re, s.b))
        return Polynomial._make(re, lam, r)

    def __pow__(self, n: int) -> "Polynomial":
        out = Polynomial._make((Q(1),), (), self.r)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # calculus ----------------------------------------------------------------
    def deriv(self, n: int = 1) -> "Polynomial":
        re, lam = self.re, self.lam
        for _ in range(n):
            re, lam = K.deriv(re), K.deriv(lam)
        return Polynomial._make(re, lam, self.r)

    def antideriv(self) -> "Polynomial":
        """Antiderivative vanishing at 0."""
        return Polynomial._make(K.antideriv(self.re), K.antideriv(self.lam), self.r)

    def integrate(self, a, b) -> Scalar:
        P = self.antideriv()
        return P(b) - P(a)

    # composition -------------------------------------------------------------
    def shift(self, c) -> "Polynomial":
        """``x -> p(x + c)``."""
        c = as_rational(c)
        return Polynomial._make(K.taylor_shift(self.re, c), K.taylor_shift(self.lam, c), self.r)

    def dilate(self, c) -> "Polynomial":
        """``x -> p(c * x)``."""
        c = as_rational(c)
        return Polynomial._make(K.dilate(self.re, c), K.dilate(self.lam, c), self.r)

    def reflect(self) -> "Polynomial":
        return self.dilate(-1)

    # evaluation --------------------------------------------------------------
    def __call__(self, x) -> Scalar:
        x = as_rational(x)
        a = K.horner(self.re, x)
        if not self.lam:
            return Scalar(a)
        return Scalar(a, K.horner(self.lam, x), self.r)

    def to_complex_coeffs(self) -> list[complex]:
        return [c.to_complex() for c in self.coeffs]

    # comparison --------------------------------------------------------------
    def __eq__(self, other):
        o = _poly_operand(other)
        if o is NotImplemented:
            return NotImplemented
        if self.re != o.re or self.lam != o.lam:
            return False
        return not self.lam or self.r == o.r

    def __hash__(self):
        return hash((self.re, self.lam, self.r if self.lam else None))

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]}, r={self.r})"


def _poly_operand(value):
    if isinstance(value, Polynomial):
        return value
    s = _scalar_operand(value)
    if s is NotImplemented:
        return s
    return Polynomial.constant(s)


def _scalar_operand(value):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, float):
        return NotImplemented
    try:
        return Scalar(value)
    except (TypeError, ValueError):
        return NotImplemented
