"""Independent float oracle: scipy adaptive quadrature on the complex embedding."""
from __future__ import annotations

from scipy.integrate import quad

from colombeau_lab.exactcalc import PiecewisePolynomial


def _center(lo, hi):
    if lo is None and hi is None:
        return 0
    if lo is None or hi is None:
        return lo if hi is None else hi
    return (lo + hi) / 2


def float_function(p: PiecewisePolynomial):
    """Float evaluator built from the complex-embedded coefficients of each piece.

    Each piece is re-expanded about its midpoint first; monomial coefficients
    of a narrow high-degree piece cancel catastrophically in floating point.
    """
    segs = []
    for lo, hi, poly in p.segments():
        c = _center(lo, hi)
        segs.append((
            None if lo is None else float(lo),
            None if hi is None else float(hi),
            float(c),
            poly.shift(c).to_complex_coeffs(),
        ))

    def f(x: float) -> complex:
        for lo, hi, c, cs in segs:
            if (lo is None or x >= lo) and (hi is None or x < hi):
                acc = 0j
                u = x - c
                for a in reversed(cs):
                    acc = acc * u + a
                return acc
        raise ValueError(f"{x} outside the domain")

    return f


def cquad(fn, a: float, b: float, points=None) -> complex:
    """Adaptive quadrature of a complex integrand, split at the given kinks."""
    # Integrands reach ~1e5 on narrow pieces, so quad's own roundoff warning
    # fires although the result is fine; full_output silences it and the
    # callers' 1e-9 comparison is the real check.
    cuts = sorted({a, b, *(t for t in (points or ()) if a < t < b)})
    opts = dict(epsabs=1e-12, epsrel=1e-12, limit=200, full_output=1)
    total = 0j
    for lo, hi in zip(cuts, cuts[1:]):
        re = quad(lambda x: fn(x).real, lo, hi, **opts)[0]
        im = quad(lambda x: fn(x).imag, lo, hi, **opts)[0]
        total += complex(re, im)
    return total


def convolution_at(p: PiecewisePolynomial, q: PiecewisePolynomial, x: float) -> complex:
    """``(p * q)(x) = int p(x - t) q(t) dt`` over the support of ``q``."""
    fp, fq = float_function(p), float_function(q)
    lo, hi = float(q.breaks[0]), float(q.breaks[-1])
    kinks = [float(b) for b in q.breaks] + [x - float(b) for b in p.breaks]
    return cquad(lambda t: fp(x - t) * fq(t), lo, hi, kinks)


def pairing(G: PiecewisePolynomial, psi: PiecewisePolynomial) -> complex:
    fg, fp = float_function(G), float_function(psi)
    lo, hi = (float(v) for v in psi.support())
    kinks = [float(b) for b in G.breaks] + [float(b) for b in psi.breaks]
    return cquad(lambda x: fg(x) * fp(x), lo, hi, kinks)


def product_pairing(factors, psi: PiecewisePolynomial, lo, hi) -> complex:
    """``int prod(factors) psi`` over ``[lo, hi]``, multiplying float values pointwise.

    Expanding the product first gives degree-30 pieces whose Horner
    evaluation loses about 1e-11 relative; the factors are much tamer.
    """
    fns = [float_function(g) for g in (*factors, psi)]
    kinks = [float(b) for g in (*factors, psi) for b in g.breaks]

    def integrand(x):
        out = 1
        for fn in fns:
            out *= fn(x)
        return out

    return cquad(integrand, float(lo), float(hi), kinks)
