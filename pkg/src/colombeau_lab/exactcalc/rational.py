"""Rational number type used throughout the package.

gmpy2's ``mpq`` is preferred when importable; ``fractions.Fraction`` is the
fallback. Both print as ``n/d`` and compare/hash compatibly.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

try:
    from gmpy2 import mpq as Q

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    Q = Fraction
    HAVE_GMPY2 = False

ZERO = Q(0)
ONE = Q(1)


def as_rational(value) -> Q:
    """Coerce ints, strings ("3/4", "-2"), Fractions and mpq values to ``Q``.

    Floats are rejected: they would silently smuggle rounding into exact code.
    """
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}; pass an exact rational")
    if isinstance(value, str):
        return Q(Fraction(value.strip()))
    if isinstance(value, (int, Rational)) or type(value) is Q:
        return Q(value)
    # gmpy2.mpz and friends
    return Q(value)


def to_string(value) -> str:
    """Canonical ``n/d`` form (``n`` alone when the denominator is 1)."""
    q = Q(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
