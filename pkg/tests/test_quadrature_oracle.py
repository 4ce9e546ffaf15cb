"""Exact engine against scipy adaptive quadrature (tolerance 1e-9 after embedding)."""
from __future__ import annotations

import random

import pytest

from colombeau_lab.association import pair, plateau_test, product_net
from colombeau_lab.exactcalc import PiecewisePolynomial, Polynomial, Q, convolve, integrate
from colombeau_lab.mollifier import scaled_instance
from colombeau_lab.models import abs_nu, heaviside, nu_plus

from quad_oracle import convolution_at, cquad, float_function, pairing

TOL = 1e-9


def test_float_function_matches_exact_evaluation():
    p = PiecewisePolynomial.compact([-1, 0, 2], [[1, 2], [Q(1, 3), 0, -1]])
    f = float_function(p)
    for x in (Q(-1, 2), Q(1, 7), Q(3, 2)):
        assert abs(f(float(x)) - complex(p(x).to_complex())) < 1e-14


def test_integral_oracle_on_biweight_square():
    b = PiecewisePolynomial.compact([-1, 1], [Polynomial([1, 0, -1]) ** 2 * Q(15, 16)])
    got = integrate(b * b).to_complex()
    assert abs(got - cquad(float_function(b * b), -1, 1)) < TOL


@pytest.mark.parametrize("seed", range(4))
def test_mollified_models_pointwise(mol, seed):
    rng = random.Random(seed)
    sigma = Q(1, rng.choice([4, 8, 16]))
    f = rng.choice([heaviside(), nu_plus(1), abs_nu(1)])
    D = scaled_instance(mol, sigma)
    F = convolve(f.function, D, window=(-1, 1))
    for _ in range(5):
        x = Q(rng.randint(-300, 300), 400)
        exact = F(x).to_complex()
        assert abs(exact - convolution_at(f.function, D, float(x))) < TOL


def test_product_pairings(mol):
    for f, p in ((heaviside(), 1), (nu_plus(1), 2), (abs_nu(1), 2)):
        sigma = Q(1, 16)
        G = product_net(f, mol, p, sigma)
        for j in range(p + 1):
            psi = plateau_test(j)
            exact = pair(G, psi).to_complex()
            assert abs(exact - pairing(G, psi.psi)) < TOL
