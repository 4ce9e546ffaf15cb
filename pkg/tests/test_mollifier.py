from __future__ import annotations

import pytest

from colombeau_lab.exactcalc import (
    PiecewisePolynomial,
    Polynomial,
    Q,
    differentiate,
    evaluate,
    integrate,
    reflect,
    scale_net,
    smoothness_check,
)
from colombeau_lab.exactcalc.linalg import SingularMatrixError, solve
from colombeau_lab.mollifier import (
    BumpSpec,
    MollifierError,
    build_bump,
    build_plateau,
    default_description,
    derivative_net,
    dumps_description,
    instantiate,
    loads_description,
    make_mollifier,
    scaled_instance,
    verify_conditions,
)


def test_unit_mass_bump_matches_closed_form():
    # base (1 - x^2)^(k+1); k = 2 gives (35/32)(1 - x^2)^3
    b = build_bump(BumpSpec((-1, 1), 2))
    assert b == PiecewisePolynomial.compact([-1, 1], [Polynomial([1, 0, -1]) ** 3 * Q(35, 32)])
    assert smoothness_check(b, 2) and not smoothness_check(b, 3)


def test_moment_conditions_exact():
    b = build_bump(BumpSpec((-1, 1), 4, ((0, 1), (1, 0), (2, 0))))
    for j, want in ((0, 1), (1, 0), (2, 0)):
        assert integrate(b * Polynomial.monomial(j)) == want
    assert smoothness_check(b, 4)
    off = build_bump(BumpSpec((Q(1, 4), Q(3, 4)), 3, ((0, 2), (1, Q(1, 3)))))
    assert integrate(off) == 2 and integrate(off * Polynomial([0, 1])) == Q(1, 3)


def test_bumpspec_validation():
    with pytest.raises(ValueError):
        BumpSpec((1, 1), 2)
    with pytest.raises(ValueError):
        BumpSpec((0, 1), 2, ((0, 1), (0, 2)))


def test_exact_solver_and_singular_systems():
    x = solve([[2, 1], [1, 3]], [Q(3), Q(5)])
    assert x == [Q(4, 5), Q(7, 5)]
    with pytest.raises(SingularMatrixError):
        solve([[1, 2], [2, 4]], [1, 2])


def test_many_moments_stay_solvable():
    # x^j multipliers against a positive base give a positive definite Hankel block
    spec = BumpSpec((-1, 1), 3, tuple((j, 1 if j == 0 else 0) for j in range(7)))
    b = build_bump(spec)
    assert [integrate(b * Polynomial.monomial(j)) for j in range(7)] == [1, 0, 0, 0, 0, 0, 0]


def test_plateau():
    p = build_plateau((Q(-1, 2), Q(1, 2)), (-1, 1), 4)
    assert p(0) == 1 and p(Q(2, 5)) == 1
    assert p(Q(3, 2)) == 0 and p(-1) == 0
    assert smoothness_check(p, 4) and not smoothness_check(p, 5)
    d = p
    for _ in range(4):
        d = differentiate(d)
        assert evaluate(d, 0) == 0
    with pytest.raises(ValueError):
        build_plateau((-2, 0), (-1, 1), 2)


def test_default_geometry(mol):
    assert mol.F2 == Q(981552, 215441)
    assert mol.G2 == Q(1963104, 215441)
    assert mol.radius == Q(15, 16)
    assert mol.k == 6


def test_make_mollifier_rejections(mol):
    f, g = mol.f, mol.g
    with pytest.raises(MollifierError, match="disjoint"):
        make_mollifier(f, f - scale_net(f, Q(1, 2)), 6)
    right = build_bump(BumpSpec((Q(3, 8), Q(5, 8)), 6))
    with pytest.raises(MollifierError, match="even"):
        make_mollifier(f, right - reflect(right), 6)
    with pytest.raises(MollifierError, match="int f"):
        make_mollifier(f * 2, g, 6)
    with pytest.raises(MollifierError, match="vanish"):
        make_mollifier(f, g * 0, 6)
    with pytest.raises(MollifierError, match="C\\^7"):
        make_mollifier(f, g, 7)
    with pytest.raises(MollifierError, match="int g"):
        make_mollifier(f, g + right + reflect(right), 6)


@pytest.mark.parametrize("s", [Q(1, 2), Q(1, 8), Q(1, 64), Q(3)])
def test_conditions_hold_exactly(mol, s):
    inst = instantiate(mol, s)
    assert verify_conditions(inst).passed
    assert integrate(inst.D * inst.D) == s
    lo, hi = inst.D.support()
    assert -mol.radius <= lo and hi <= mol.radius


def test_relation_constant(mol):
    inst = instantiate(mol, Q(1, 8))
    assert inst.r == (Q(1, 8) - mol.F2) / mol.G2
    assert inst.r == Q(-7636975, 15704832)
    assert inst.r < 0 and not inst.degenerate


def test_degenerate_instance(mol):
    inst = instantiate(mol, mol.F2)
    assert inst.degenerate and inst.r == 0 and inst.D == mol.f
    assert verify_conditions(inst).passed


def test_tampered_mass_fails(mol):
    inst = instantiate(mol, Q(1, 8))
    bad = type(inst)(inst.parent, inst.s, inst.r, inst.D * 2)
    report = verify_conditions(bad)
    assert not report.passed
    assert not report.checks["mass"][2]


@pytest.mark.parametrize("sigma", [Q(1, 16), Q(1, 4)])
def test_scaled_instance(mol, sigma):
    D = scaled_instance(mol, sigma)
    assert integrate(D) == 1
    assert integrate(D * D) == 1
    assert reflect(D) == D
    lo, hi = D.support()
    assert -sigma * mol.radius <= lo and hi <= sigma * mol.radius
    with pytest.raises(ValueError):
        scaled_instance(mol, 0)


def test_derivative_net(mol):
    sigma = Q(1, 8)
    assert derivative_net(mol, sigma, 0) == scaled_instance(mol, sigma)
    for p in range(1, 5):
        d = derivative_net(mol, sigma, p)
        assert d == differentiate(derivative_net(mol, sigma, p - 1))
        assert reflect(d) == d * (-1) ** p
        assert integrate(d) == 0
    with pytest.raises(MollifierError):
        derivative_net(mol, sigma, mol.k)


def test_description_roundtrip(mol, alt):
    text = dumps_description(mol)
    again = loads_description(text)
    assert again.f == mol.f and again.g == mol.g and again.k == mol.k
    assert dumps_description(again) == text
    assert loads_description(dumps_description(alt)).G2 == alt.G2


def test_description_rejects_wrong_format():
    desc = default_description()
    desc["format"] = "something-else/1"
    with pytest.raises(ValueError):
        loads_description(__import__("json").dumps(desc))


def test_alternative_geometry_differs(mol, alt):
    assert alt.k != mol.k and alt.radius != mol.radius
    assert alt.F2 == Q(27027, 7429) and alt.G2 == Q(99792, 4199)
    assert verify_conditions(instantiate(alt, Q(1, 32))).passed
