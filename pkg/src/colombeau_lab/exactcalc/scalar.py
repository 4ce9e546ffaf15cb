"""Exact scalars ``a + b*lam`` with ``lam**2 = r``.

A scalar whose relation constant ``r`` is ``None`` is a plain rational. Two
scalars combine only when their relations agree or one side is rational.
"""
from __future__ import annotations

import math

from .rational import Q, ZERO, as_rational, to_string


class IncompatibleRelationError(ValueError):
    """Raised when values built over different ``lam**2 = r`` relations meet."""


def merge_relation(r1, r2):
    if r1 is None:
        return r2
    if r2 is None or r1 == r2:
        return r1
    raise IncompatibleRelationError(f"lam^2 = {r1} and lam^2 = {r2} cannot be mixed")


class Scalar:
    __slots__ = ("a", "b", "r")

    def __init__(self, a=0, b=0, r=None):
        self.a = as_rational(a)
        self.b = as_rational(b)
        self.r = None if r is None else as_rational(r)
        if self.r is None and self.b:
            raise ValueError("a nonzero lam-coefficient needs a relation constant r")

    @classmethod
    def lam(cls, r) -> "Scalar":
        """The generator ``lam`` itself for the relation ``lam**2 = r``."""
        return cls(0, 1, r)

    @staticmethod
    def coerce(value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        return Scalar(value)

    @property
    def is_rational(self) -> bool:
        return not self.b

    def rational(self) -> Q:
        """The value as a rational; raises if the lam-part is nonzero."""
        if self.b:
            raise ValueError(f"{self} is not rational")
        return self.a

    # ring operations -----------------------------------------------------
    def __add__(self, other):
        o = _operand(other)
        if o is NotImplemented:
            return o
        return Scalar(self.a + o.a, self.b + o.b, merge_relation(self.r, o.r))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.a, -self.b, self.r)

    def __sub__(self, other):
        o = _operand(other)
        if o is NotImplemented:
            return o
        return Scalar(self.a - o.a, self.b - o.b, merge_relation(self.r, o.r))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = _operand(other)
        if o is NotImplemented:
            return o
        r = merge_relation(self.r, o.r)
        a = self.a * o.a
        if self.b and o.b:
            a += self.b * o.b * r
        return Scalar(a, self.a * o.b + self.b * o.a, r)

    __rmul__ = __mul__

    def conjugate(self) -> "Scalar":
        """Galois conjugate ``a - b*lam``."""
        return Scalar(self.a, -self.b, self.r)

    def norm(self) -> Q:
        """``(a + b lam)(a - b lam) = a^2 - r b^2``."""
        if not self.b:
            return self.a * self.a
        return self.a * self.a - self.r * self.b * self.b

    def __truediv__(self, other):
        o = _operand(other)
        if o is NotImplemented:
            return o
        if o.is_rational:
            if not o.a:
                raise ZeroDivisionError("division by zero scalar")
            return Scalar(self.a / o.a, self.b / o.a, merge_relation(self.r, o.r))
        n = o.norm()
        if not n:
            raise ZeroDivisionError(f"{o} is a zero divisor (r is a square)")
        num = self * o.conjugate()
        return Scalar(num.a / n, num.b / n, num.r)

    def __rtruediv__(self, other):
        return Scalar.coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Scalar(1, 0, self.r)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # comparison / hashing -----------------------------------------------
    def __eq__(self, other):
        o = _operand(other)
        if o is NotImplemented:
            return NotImplemented
        if self.a != o.a or self.b != o.b:
            return False
        return not self.b or self.r == o.r

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b, self.r))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    # embedding ------------------------------------------------------------
    def to_complex(self) -> complex:
        """Embed with ``lam = sqrt(r)`` (r >= 0) or ``i*sqrt(-r)`` (r < 0)."""
        if not self.b:
            return complex(float(self.a), 0.0)
        if self.r >= 0:
            return complex(float(self.a) + float(self.b) * math.sqrt(float(self.r)), 0.0)
        return complex(float(self.a), float(self.b) * math.sqrt(float(-self.r)))

    def __complex__(self):
        return self.to_complex()

    def __float__(self):
        z = self.to_complex()
        if z.imag:
            raise ValueError(f"{self} embeds to the non-real value {z}")
        return z.real

    def __abs__(self):
        return abs(self.to_complex())

    def __repr__(self):
        if not self.b:
            return f"Scalar({to_string(self.a)})"
        return f"Scalar({to_string(self.a)}, {to_string(self.b)}, r={to_string(self.r)})"

    def __str__(self):
        if not self.b:
            return to_string(self.a)
        sign = "-" if self.b < 0 else "+"
        return f"{to_string(self.a)} {sign} {to_string(abs(self.b))}*lam"


def _operand(value):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, float):
        return NotImplemented
    try:
        return Scalar(value)
    except (TypeError, ValueError):
        return NotImplemented
