"""Exact pairings of representatives with test functions."""
from __future__ import annotations

from ..exactcalc import (
    DomainError,
    PiecewisePolynomial,
    Scalar,
    as_rational,
    extend_by_zero,
    integrate,
)
from ..mollifier import Mollifier, derivative_net
from ..models import PiecewiseModel, model
from .testfunctions import TestFunction


def pair(G: PiecewisePolynomial, psi: TestFunction | PiecewisePolynomial) -> Scalar:
    """Exact ``int G psi``; ``G`` must be known on the support of ``psi``."""
    fn = psi.psi if isinstance(psi, TestFunction) else psi
    lo, hi = fn.support()
    glo, ghi = G.domain
    if (glo is not None and glo > lo) or (ghi is not None and ghi < hi):
        G = extend_by_zero(G)
        glo, ghi = G.domain
        if (glo is not None and glo > lo) or (ghi is not None and ghi < hi):
            raise DomainError("G is not known on the whole support of the test function")
    return integrate(G * fn, lo, hi)


def product_net(f: PiecewiseModel, m: Mollifier, p: int, sigma) -> PiecewisePolynomial:
    """Representative ``F_sigma * D_sigma^(p)``, compactly supported in ``[-sigma l, sigma l]``."""
    sigma = as_rational(sigma)
    W = 2 * sigma * m.radius
    F = model(f, m, sigma, W).F
    return extend_by_zero(F * derivative_net(m, sigma, p))


def product_pairing(f: PiecewiseModel, m: Mollifier, p: int, sigma, psi: TestFunction) -> Scalar:
    """Exact ``<F_sigma . D_sigma^(p), psi>``."""
    return pair(product_net(f, m, p, sigma), psi)
