from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given

from colombeau_lab.exactcalc import IncompatibleRelationError, Q, Scalar, as_rational, to_string

from strategies import rationals, scalars


def test_as_rational_accepts_strings_and_rejects_floats():
    assert as_rational("3/4") == Q(3, 4)
    assert as_rational(" -2 ") == -2
    assert as_rational(Fraction(5, 10)) == Q(1, 2)
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_to_string_is_canonical():
    assert to_string(Q(6, 4)) == "3/2"
    assert to_string(Q(-8, 4)) == "-2"
    assert to_string(0) == "0"


def test_multiplication_rule():
    r = Q(-3)
    x = Scalar(1, 2, r)
    y = Scalar(Q(1, 2), -1, r)
    # (a+b l)(c+d l) = (ac+bd r) + (ad+bc) l
    assert x * y == Scalar(Q(1, 2) + 2 * -1 * r, 1 * -1 + 2 * Q(1, 2), r)


def test_lambda_squares_to_r():
    lam = Scalar.lam(Q(-7, 5))
    assert lam * lam == Q(-7, 5)
    assert (lam * lam).is_rational


def test_mixing_relations_fails():
    with pytest.raises(IncompatibleRelationError):
        Scalar(0, 1, 2) + Scalar(0, 1, 3)
    # a pure rational mixes with anything
    assert Scalar(0, 1, 2) + 1 == Scalar(1, 1, 2)


def test_complex_embedding():
    assert Scalar(1, 2, 4).to_complex() == 5
    z = Scalar(1, 3, -4).to_complex()
    assert z == complex(1, 6)
    assert math.isclose(abs(Scalar(0, 1, 2).to_complex()), math.sqrt(2))
    with pytest.raises(ValueError):
        float(Scalar(0, 1, -1))


def test_division_and_norm():
    r = Q(5)
    x = Scalar(3, 1, r)
    assert x * (1 / x) == 1
    assert x.norm() == 9 - 5
    with pytest.raises(ZeroDivisionError):
        x / Scalar(0)


def test_str_and_equality_with_rationals():
    assert str(Scalar(Q(1, 2), -1, 3)) == "1/2 - 1*lam"
    assert str(Scalar(3)) == "3"
    assert Scalar(Q(2, 3)) == Q(2, 3)
    assert hash(Scalar(Q(2, 3))) == hash(Scalar(Q(2, 3), 0, 7))


R = Q(-11, 3)


@given(scalars(R), scalars(R), scalars(R))
def test_ring_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == 0


@given(scalars(R), rationals)
def test_embedding_is_a_homomorphism(x, q):
    y = x * q + x * x
    got = y.to_complex()
    want = x.to_complex() * float(q) + x.to_complex() ** 2
    assert abs(got - want) <= 1e-9 * max(1.0, abs(want))
