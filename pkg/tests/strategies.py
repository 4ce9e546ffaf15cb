"""Hypothesis strategies shared by the property tests."""
from __future__ import annotations

from hypothesis import strategies as st

from colombeau_lab.exactcalc import PiecewisePolynomial, Polynomial, Q, Scalar

rationals = st.builds(
    Q,
    st.integers(min_value=-60, max_value=60),
    st.integers(min_value=1, max_value=24),
)
nonzero_rationals = rationals.filter(bool)


def scalars(r):
    return st.builds(lambda a, b: Scalar(a, b, r), rationals, rationals)


def polynomials(max_degree=5, r=None):
    coeff = rationals if r is None else scalars(r)
    return st.lists(coeff, max_size=max_degree + 1).map(lambda cs: Polynomial(cs, r))


@st.composite
def compact_pieces(draw, max_pieces=3, max_degree=4):
    """A compactly supported piecewise polynomial with random rational breaks."""
    n = draw(st.integers(min_value=1, max_value=max_pieces))
    breaks = sorted(set(draw(st.lists(rationals, min_size=n + 1, max_size=n + 1, unique=True))))
    if len(breaks) < 2:
        breaks = [Q(0), Q(1)]
    pieces = [draw(polynomials(max_degree)) for _ in range(len(breaks) - 1)]
    return PiecewisePolynomial.compact(breaks, pieces)
