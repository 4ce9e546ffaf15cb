"""Integral identities of an instantiated mollifier used inside the product proofs."""
from __future__ import annotations

from dataclasses import dataclass

from ..exactcalc import (
    PiecewisePolynomial,
    Polynomial,
    Q,
    antiderivative,
    as_rational,
    differentiate,
    integrate,
    to_string,
)
from ..mollifier import Mollifier, instantiate


@dataclass
class IdentityCheck:
    name: str
    expected: Q
    observed: object

    @property
    def passed(self) -> bool:
        return self.observed == self.expected


@dataclass
class IdentityReport:
    sigma: Q
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def rows(self):
        return [(c.name, to_string(c.expected), str(c.observed), c.passed) for c in self.checks]


def identity_suite(m: Mollifier, sigma) -> IdentityReport:
    """Five exact identities for ``D = D(sigma, .)`` on ``[-l, l]``."""
    sigma = as_rational(sigma)
    D = instantiate(m, sigma).D
    l = m.radius
    dD = differentiate(D)
    v = PiecewisePolynomial.from_polynomial(Polynomial.monomial(1))
    v2 = PiecewisePolynomial.from_polynomial(Polynomial.monomial(2))
    A = antiderivative(D, -l)
    checks = [
        IdentityCheck("int v D^2 = 0", Q(0), integrate(v * D * D, -l, l)),
        IdentityCheck("int D(v) int_{-l}^v D = 1/2", Q(1, 2), integrate(D * A, -l, l)),
        IdentityCheck("int D D' = 0", Q(0), integrate(D * dD, -l, l)),
        IdentityCheck("(1/sigma) int v D D' = -1/2", Q(-1, 2), integrate(v * D * dD, -l, l) / sigma),
        IdentityCheck("int v^2 D D' = 0", Q(0), integrate(v2 * D * dD, -l, l)),
    ]
    return IdentityReport(sigma, checks)
