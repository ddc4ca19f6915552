from fractions import Fraction
from functools import partial

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from stringy_zeta.abstract import zeta_abstract
from stringy_zeta.errors import InputError, StrictlyLcAtDOne
from stringy_zeta.stringy import Level, euler_at, hodge_image, is_constant_in_s, zeta
from stringy_zeta.stringy.invariants import batyrev_expression
from stringy_zeta.surface import Classification, classify
from stringy_zeta.surface.catalog import (
    create_a_n_germ,
    create_cycle_germ,
    create_elliptic_germ,
    create_h_chain_germ,
    create_high_genus_germ,
    create_lc_star_germ,
    create_star_germ,
    create_tangent_branch_germ,
    create_zero_chain_germ,
)
from stringy_zeta.symbolic import S, LaurentExpr, RationalExpr, UniRationalFn, symbol, zeta_factor
from tests.strategies import BOUNDARY_WEIGHTS, germs

HALF = Fraction(1, 2)
L = LaurentExpr.monomial(L=1)

GERM_FIXTURES = [
    "a1",
    "a3",
    "cycle-2",
    "cycle-3",
    "cycle-5",
    "elliptic-kappa2",
    "genus2",
    "h-chain-k0",
    "h-chain-k1",
    "h-chain-k3",
    "lc-star",
    "star-2-3-6",
    "star-2-4-4",
    "star-3-3-3",
    "tangent-branch-kappa1",
    "tangent-branch-kappa2",
    "tangent-branch-kappa3",
    "tangent-branch-kappa5",
    "zero-chain",
]


def euler(expression):
    return UniRationalFn.from_expr(expression)


def exceptional_factor(d):
    # (L-1)/(X-1) with X = L^((1-d)(1-s))
    return zeta_factor(1 - Fraction(d), Fraction(d) - 1)


def test_a1_at_d_one():
    assert zeta(create_a_n_germ(1), 1).value == RationalExpr(L + 1)
    assert zeta(create_a_n_germ(1), 1, "euler").value == UniRationalFn(2)


def test_klt_zeta_is_the_batyrev_expression():
    graph = create_a_n_germ(3)
    for d in (0, HALF, 1):
        z = zeta(graph, d)
        assert is_constant_in_s(z)
        assert z.value == RationalExpr(3 * L + 1)
        assert z.value == batyrev_expression(graph)
    assert zeta(graph, HALF, "euler").value == UniRationalFn(4)


def test_elliptic_germ_below_d_one():
    graph = create_elliptic_germ(2)
    z = zeta(graph, HALF)
    assert z.contracted == ()
    assert z.nu_N("E") == (HALF, -HALF)
    assert z.value == symbol("E") * exceptional_factor(HALF)
    assert zeta(graph, HALF, "euler").value == UniRationalFn(0)


def test_elliptic_germ_at_d_one():
    with pytest.raises(StrictlyLcAtDOne):
        zeta(create_elliptic_germ(2), 1)


def test_single_curve_of_genus_two():
    graph = create_high_genus_germ(2, -1)
    assert zeta(graph, 1).value == symbol("E") * zeta_factor(0, -2)
    assert zeta(graph, 1, "euler").value == euler(1 / S)


def test_germ_with_a_zero_discrepancy_curve():
    z = zeta(create_zero_chain_germ(), 1, "euler")
    assert z.contracted == ("E1",)
    assert z.nu_N("E1") == (HALF, -HALF)
    assert z.nu_N("E0") == (0, -1)
    assert z.value == euler(-1 / S)


@pytest.mark.parametrize("length", [2, 3, 5])
def test_cycle_germs(length):
    graph = create_cycle_germ(length)
    f = exceptional_factor(HALF)
    assert zeta(graph, HALF).value == length * (L - 1) * f + length * f * f
    assert zeta(graph, HALF, "euler").value == euler(4 * length / (1 - S) ** 2)


@pytest.mark.parametrize("d", [Fraction(0), Fraction(1, 3), HALF])
def test_cycle_euler_zeta_in_d(d):
    expected = euler(3 / ((1 - sympy.Rational(d.numerator, d.denominator)) ** 2 * (1 - S) ** 2))
    assert zeta(create_cycle_germ(3), d, "euler").value == expected


def test_h_chain_without_chain_edges():
    # Y = L^(1-d/2) T^((1-d)/2) at d = 1/2
    y = LaurentExpr.monomial(L=Fraction(3, 4), T=Fraction(1, 4))
    z = zeta(create_h_chain_germ(0), HALF)
    assert z.contracted == ("E1", "E2", "E3", "E4")
    assert z.value == exceptional_factor(HALF) * (L + 1 + 4 * y)


@pytest.mark.parametrize("k", [1, 3])
def test_h_chain_with_chain_edges(k):
    y = LaurentExpr.monomial(L=Fraction(3, 4), T=Fraction(1, 4))
    f = exceptional_factor(HALF)
    expected = k * f * f + f * ((k - 1) * (L - 1) + 2 * L + 4 * y)
    assert zeta(create_h_chain_germ(k), HALF).value == expected


@pytest.mark.parametrize("k", [0, 1, 3])
@pytest.mark.parametrize("d", [Fraction(0), HALF])
def test_h_chain_euler_zeta(k, d):
    a = (1 - sympy.Rational(d.numerator, d.denominator)) * (1 - S)
    assert zeta(create_h_chain_germ(k), d, "euler").value == euler(k / a**2 + 6 / a)


def test_h_chain_models_agree():
    graph = create_h_chain_germ(1)
    assert zeta(graph, HALF).value == zeta(graph, HALF, model="canonical").value


def test_lc_star_before_the_legs_contract():
    d = Fraction(1, 4)
    z = zeta(create_lc_star_germ(), d, "euler")
    assert z.contracted == ()
    dd = sympy.Rational(1, 4)
    numerator = 5 - 2 * dd + (2 * dd - sympy.Rational(7, 3)) * S
    denominator = (1 - dd) * (1 - S) * (1 - dd + (dd - sympy.Rational(2, 3)) * S)
    assert z.value == euler(numerator / denominator)


def test_lc_star_after_the_legs_contract():
    d = Fraction(3, 4)
    z = zeta(create_lc_star_germ(), d)
    assert z.contracted == ("E1", "E2", "E3")
    w = LaurentExpr.monomial(L=Fraction(5, 12), T=Fraction(1, 12))
    assert z.value == exceptional_factor(d) * (L - 2 + 3 * (1 + w + w * w))
    assert zeta(create_lc_star_germ(), d, "euler").value == euler(8 / (sympy.Rational(1, 4) * (1 - S)))


def test_lc_star_minimal_and_canonical_agree_at_the_flip_weight():
    graph = create_lc_star_germ()
    minimal = zeta(graph, HALF)
    canonical = zeta(graph, HALF, model="canonical")
    assert minimal.contracted == ()
    assert canonical.contracted == ("E1", "E2", "E3")
    assert minimal.value == canonical.value


@pytest.mark.parametrize("legs", [(2, 3, 6), (2, 4, 4), (3, 3, 3)])
def test_star_germs_near_d_one(legs):
    graph = create_star_germ([[-n] for n in legs])
    z = zeta(graph, Fraction(9, 10), "euler")
    assert z.contracted == ("E1", "E2", "E3")
    for position, n in enumerate(legs, start=1):
        assert z.nu_N(f"E{position}") == (Fraction(11, 10 * n), Fraction(-1, 10 * n))
    assert z.value == euler((sum(legs) - 1) / (sympy.Rational(1, 10) * (1 - S)))


@pytest.mark.parametrize("kappa", [1, 2, 3, 5])
def test_tangent_branch_at_d_one(kappa):
    z = zeta(create_tangent_branch_germ(kappa), 1, "euler")
    assert z.contracted == ("E1",)
    assert z.value == euler(sympy.Rational(kappa**2, 2) / S**2 - sympy.Rational(kappa, 2) / S)


def test_tangent_branch_below_d_one():
    kappa, d = 2, HALF
    z = zeta(create_tangent_branch_germ(kappa), d, "euler")
    assert z.contracted == ("E1", "E2")
    p = 1 - sympy.Rational(1, 2) + (sympy.Rational(1, 2) - 1 - sympy.Rational(1, kappa)) * S
    assert z.value == euler(1 / (2 * p**2) + 1 / (2 * p))


def test_unknown_model_is_rejected():
    with pytest.raises(InputError):
        zeta(create_a_n_germ(1), 1, model="terminal")


@pytest.mark.parametrize("name", GERM_FIXTURES)
def test_levels_are_consistent(load_fixture, name):
    graph = load_fixture(name)
    d = HALF if classify(graph) is Classification.STRICTLY_LC else 1
    motivic = zeta(graph, d, Level.MOTIVIC)
    hodge = zeta(graph, d, Level.HODGE)
    euler_zeta = zeta(graph, d, Level.EULER)
    assert hodge.value == hodge_image(motivic)
    for s in (Fraction(1, 3), Fraction(7, 11), Fraction(-5, 7)):
        assert euler_at(motivic, s) == euler_at(euler_zeta, s)
        assert euler_at(hodge, s) == euler_at(euler_zeta, s)


@pytest.mark.parametrize("name", GERM_FIXTURES)
def test_nu_plus_N_is_a_on_every_fixture(load_fixture, name):
    graph = load_fixture(name)
    d = HALF if classify(graph) is Classification.STRICTLY_LC else 1
    for entry in zeta(graph, d, "euler").table:
        assert entry.nu + entry.N == entry.a


@given(st.data())
def test_zeta_does_not_depend_on_the_model_below_d_one(data):
    graph = data.draw(germs(max_vertices=6))
    d = data.draw(st.sampled_from(BOUNDARY_WEIGHTS))
    minimal = zeta(graph, d, "euler")
    canonical = zeta(graph, d, "euler", model="canonical")
    assert minimal.value == canonical.value


# Closed forms, with f = (L-1)/(X-1) and X = L^((1-d)(1-s))


def rational(d):
    return sympy.Rational(d.numerator, d.denominator)


def cycle_motivic(r, d):
    f = exceptional_factor(d)
    return r * (L - 1) * f + r * f * f


def cycle_euler(r, d):
    return euler(r / ((1 - rational(d)) ** 2 * (1 - S) ** 2))


def h_chain_motivic(k, d):
    y = LaurentExpr.monomial(L=1 - d / 2, T=(1 - d) / 2)
    f = exceptional_factor(d)
    return k * f * f + f * ((k - 1) * (L - 1) + 2 * L + 4 * y)


def h_chain_euler(k, d):
    a = (1 - rational(d)) * (1 - S)
    return euler(k / a**2 + 6 / a)


def lc_star_contracted_motivic(d):
    w = LaurentExpr.monomial(L=(2 - d) / 3, T=(1 - d) / 3)
    return exceptional_factor(d) * (L - 2 + 3 * (1 + w + w * w))


def lc_star_contracted_euler(d):
    return euler(8 / ((1 - rational(d)) * (1 - S)))


def lc_star_uncontracted_motivic(d):
    x = LaurentExpr.monomial(L=1 - d, T=1 - d)
    v = LaurentExpr.monomial(L=1 - d, T=Fraction(2, 3) - d)
    numerator = (L - 1) * (-1 - L + 3 * LaurentExpr.monomial(L=2 - d, T=1 - d) + (L - 2) * v)
    return RationalExpr(numerator, [x - 1, v - 1])


def lc_star_uncontracted_euler(d):
    dd = rational(d)
    numerator = 5 - 2 * dd + (2 * dd - sympy.Rational(7, 3)) * S
    return euler(numerator / ((1 - dd) * (1 - S) * (1 - dd + (dd - sympy.Rational(2, 3)) * S)))


def tangent_branch_euler(kappa, d):
    p = 1 - rational(d) + (rational(d) - 1 - sympy.Rational(1, kappa)) * S
    return euler(1 / (2 * p**2) + 1 / (2 * p))


def plane_quartic_motivic():
    r = LaurentExpr.monomial(L=Fraction(1, 5), T=Fraction(1, 5))
    c = LaurentExpr.monomial(symbols={"C": 1})
    numerator = L**3 - 1 + (L - 1) * c * (r + r**2 + r**3 + r**4)
    return RationalExpr(numerator, [LaurentExpr.monomial(T=1) - 1])


def germ_value(factory, d, level, model="minimal"):
    return lambda load: zeta(factory(), d, level, model=model).value


def dataset_value(name, level):
    return lambda load: zeta_abstract(load(name), level).value


THIRD, NINE_TENTHS = Fraction(1, 3), Fraction(9, 10)

GOLDEN = (
    [
        pytest.param(germ_value(partial(create_cycle_germ, r), d, level), expected(r, d), id=f"cycle-{r}-{level}-d={d}")
        for r in (3, 5)
        for d in (Fraction(0), THIRD, NINE_TENTHS)
        for level, expected in (("motivic", cycle_motivic), ("euler", cycle_euler))
    ]
    + [
        pytest.param(
            germ_value(partial(create_h_chain_germ, k), d, level), expected(k, d), id=f"h-chain-{k}-{level}-d={d}"
        )
        for k in (0, 1, 3)
        for d in (Fraction(0), THIRD, NINE_TENTHS)
        for level, expected in (("motivic", h_chain_motivic), ("euler", h_chain_euler))
    ]
    + [
        pytest.param(
            germ_value(create_lc_star_germ, d, level, model), expected(d), id=f"lc-star-{model}-{level}-d={d}"
        )
        for d, model in ((HALF, "canonical"), (NINE_TENTHS, "minimal"))
        for level, expected in (("motivic", lc_star_contracted_motivic), ("euler", lc_star_contracted_euler))
    ]
    + [
        pytest.param(germ_value(create_lc_star_germ, d, level), expected(d), id=f"lc-star-minimal-{level}-d={d}")
        for d in (Fraction(0), Fraction(1, 4), HALF)
        for level, expected in (("motivic", lc_star_uncontracted_motivic), ("euler", lc_star_uncontracted_euler))
    ]
    + [
        pytest.param(
            germ_value(partial(create_tangent_branch_germ, kappa), d, "euler"),
            tangent_branch_euler(kappa, d),
            id=f"tangent-branch-{kappa}-d={d}",
        )
        for kappa in (1, 2, 3, 5)
        for d in (Fraction(0), HALF, NINE_TENTHS)
    ]
    + [pytest.param(dataset_value("example-3-6", "motivic"), plane_quartic_motivic(), id="plane-quartic-motivic")]
)


@pytest.mark.parametrize("compute, expected", GOLDEN)
def test_closed_forms(load_fixture, compute, expected):
    assert compute(load_fixture) == expected


def test_lc_star_closed_forms_meet_at_the_flip_weight():
    assert lc_star_uncontracted_motivic(HALF) == lc_star_contracted_motivic(HALF)
    assert lc_star_uncontracted_euler(HALF) == lc_star_contracted_euler(HALF)
