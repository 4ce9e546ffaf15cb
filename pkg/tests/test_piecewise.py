from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from colombeau_lab.exactcalc import (
    DiscontinuityError,
    DomainError,
    NotCompactError,
    PiecewisePolynomial,
    Polynomial,
    Q,
    Scalar,
    antiderivative,
    certify,
    convolve,
    differentiate,
    evaluate,
    integrate,
    reflect,
    restrict,
    scale_net,
    smoothness_check,
    translate,
)
from colombeau_lab.exactcalc.serialize import dumps, from_dict, loads, to_dict

from strategies import compact_pieces, rationals


def box(a=-1, b=1, c=1):
    return PiecewisePolynomial.compact([a, b], [[c]])


def biweight():
    return PiecewisePolynomial.compact([-1, 1], [Polynomial([1, 0, -1]) ** 2 * Q(15, 16)], smoothness=1)


def step():
    return PiecewisePolynomial([0], [], head=[0], tail=[1])


def test_constructor_validation():
    with pytest.raises(ValueError):
        PiecewisePolynomial([1, 0], [[1]])
    with pytest.raises(ValueError):
        PiecewisePolynomial([0, 1], [[1], [2]])
    p = PiecewisePolynomial([0, 1], [[1]])
    assert p.domain == (0, 1)
    assert not p.is_compact
    assert box().is_compact and box().support() == (-1, 1)


def test_product_identities():
    p = biweight()
    assert (p * 0).support() == (0, 0)
    assert p * 1 == p
    lhs = PiecewisePolynomial.compact([-1, 1], [[1, 0, -1]]) * PiecewisePolynomial.compact([-1, 1], [[1, 1]])
    assert lhs(Q(1, 3)) == Polynomial([1, 1, -1, -1])(Q(1, 3))


def test_integrate_examples():
    assert integrate(biweight()) == 1
    assert integrate(biweight() * biweight()) == Q(5, 7)
    odd = PiecewisePolynomial.compact([-2, 2], [[0, 3, 0, -1]])
    assert integrate(odd) == 0
    assert integrate(step(), -1, Q(1, 2)) == Q(1, 2)
    with pytest.raises(NotCompactError):
        integrate(step())
    with pytest.raises(ValueError):
        integrate(box(), 1, 0)


def test_differentiate_examples():
    assert differentiate(PiecewisePolynomial.constant(1)) == PiecewisePolynomial.constant(0)
    half_sq = PiecewisePolynomial([0, 1], [[0, 0, Q(1, 2)]], head=[0], smoothness=1)
    assert differentiate(half_sq) == PiecewisePolynomial([0, 1], [[0, 1]], head=[0])
    with pytest.raises(DiscontinuityError):
        differentiate(step())
    # continuous pieces with unset smoothness are still differentiable
    hat = PiecewisePolynomial.compact([-1, 0, 1], [[1, 1], [1, -1]])
    assert differentiate(hat)(Q(-1, 2)) == 1


def test_antiderivative_examples():
    two_x = PiecewisePolynomial([-1, 1], [[0, 2]])
    assert antiderivative(two_x, -1) == PiecewisePolynomial([-1, 1], [[-1, 0, 1]])
    F = antiderivative(biweight(), -1)
    assert F(-1) == 0 and F(1) == 1 and F(5) == 1
    assert antiderivative(box(c=0), 0).support() == (0, 0)


def test_reflect_and_smoothness():
    p = biweight()
    assert reflect(p) == p
    skew = PiecewisePolynomial.compact([-1, 0, 2], [[1], [1, 1]])
    assert reflect(reflect(skew)) == skew
    for k in (1, 2, 3):
        bump = PiecewisePolynomial.compact([-1, 1], [Polynomial([1, 0, -1]) ** (k + 1)])
        assert smoothness_check(bump, k)
        assert not smoothness_check(bump, k + 1)
        assert certify(bump).smoothness == k


def test_evaluate_sides_and_domain():
    s = step()
    assert evaluate(s, 0) == 1
    assert evaluate(s, 0, "left") == 0
    p = PiecewisePolynomial([0, 1], [[1]])
    assert p(1) == 1
    with pytest.raises(DomainError):
        p(2)


def test_restrict_and_translate():
    s = restrict(step(), -1, 2)
    assert s.domain == (-1, 2)
    assert integrate(s, -1, 2) == 2
    t = translate(box(0, 1), Q(1, 2))
    assert t.support() == (Q(1, 2), Q(3, 2))


def test_scale_net_examples():
    p = biweight()
    assert scale_net(p, 1) == p
    assert integrate(scale_net(p, Q(1, 8))) == integrate(p)
    assert scale_net(p, Q(1, 4)).support() == (Q(-1, 4), Q(1, 4))
    with pytest.raises(ValueError):
        scale_net(p, 0)


def test_convolution_box_box_is_hat():
    hat = convolve(box(Q(-1, 2), Q(1, 2)), box(Q(-1, 2), Q(1, 2)))
    assert hat == PiecewisePolynomial.compact([-1, 0, 1], [[1, 1], [1, -1]])


def test_step_convolution_is_one_right_of_support():
    q = biweight()
    F = convolve(step(), q, window=(-3, 3))
    assert F(1) == 1 and F(Q(5, 2)) == 1
    assert F(-1) == 0 and F(0) == Q(1, 2)
    with pytest.raises(DomainError):
        convolve(PiecewisePolynomial([-1, 1], [[1]]), q, window=(-1, 1))
    with pytest.raises(NotCompactError):
        convolve(q, step())


def test_even_convolution_stays_even():
    out = convolve(biweight(), box(Q(-1, 3), Q(1, 3)))
    assert reflect(out) == out


def test_lambda_valued_convolution():
    lam = Scalar.lam(Q(-2))
    q = PiecewisePolynomial.compact([-1, 1], [Polynomial([1, lam])])
    out = convolve(step(), q, window=(-2, 2))
    assert out(2) == integrate(q)
    assert not out(0).is_rational


@given(compact_pieces(), compact_pieces(), rationals)
def test_linearity_of_integral(p, q, c):
    assert integrate(p + q) == integrate(p) + integrate(q)
    assert integrate(p * c) == integrate(p) * c


@given(compact_pieces(max_pieces=2, max_degree=3), compact_pieces(max_pieces=2, max_degree=3))
def test_convolution_laws(p, q):
    pq, qp = convolve(p, q), convolve(q, p)
    assert pq == qp
    assert integrate(pq) == integrate(p) * integrate(q)


@given(compact_pieces(max_pieces=2, max_degree=3))
def test_derivative_moves_onto_smooth_factor(p):
    q = PiecewisePolynomial.compact([-1, 1], [Polynomial([1, 0, -1]) ** 3], smoothness=2)
    lhs = differentiate(convolve(p, q))
    rhs = convolve(p, differentiate(q))
    assert lhs == rhs


@given(st.integers(min_value=1, max_value=5), rationals)
def test_differentiate_antiderivative_roundtrip(k, anchor):
    bump = PiecewisePolynomial.compact([-1, 1], [Polynomial([1, 0, -1]) ** k * Polynomial([1, 2, 3, 4, 5])])
    assert differentiate(antiderivative(bump, anchor)) == bump


def test_serialization_roundtrip_rational():
    p = biweight()
    text = dumps(p)
    assert loads(text) == p
    assert loads(text).smoothness == 1
    s = from_dict(to_dict(step()))
    assert s == step() and s.domain == (None, None)


def test_serialization_roundtrip_lambda():
    lam = Scalar.lam(Q(-7, 3))
    p = PiecewisePolynomial.compact([0, Q(1, 2)], [Polynomial([1, lam, Q(2, 5)])]).with_smoothness(float("inf"))
    d = to_dict(p)
    assert d["relation"] == "-7/3"
    q = loads(dumps(p))
    assert q == p and q.r == Q(-7, 3) and q.smoothness == p.smoothness
