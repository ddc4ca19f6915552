from fractions import Fraction

from stringy_zeta.stringy import eval_or_limit_at_1, is_constant_in_s, zeta
from stringy_zeta.surface.catalog import (
    create_a_n_germ,
    create_cycle_germ,
    create_h_chain_germ,
    create_high_genus_germ,
    create_lc_star_germ,
    create_tangent_branch_germ,
)
from stringy_zeta.symbolic import LaurentExpr, PoleReport, RationalExpr, symbol

L = LaurentExpr.monomial(L=1)
HALF = Fraction(1, 2)


def test_klt_value_at_s1_is_checked_against_batyrev():
    graph = create_a_n_germ(3)
    assert eval_or_limit_at_1(zeta(graph, 1)) == RationalExpr(3 * L + 1)
    assert eval_or_limit_at_1(zeta(graph, 1, "hodge")) == RationalExpr(3 * LaurentExpr.monomial(u=1, v=1) + 1)
    assert eval_or_limit_at_1(zeta(graph, 1, "euler")) == 4


def test_klt_value_at_s1_does_not_depend_on_d():
    graph = create_a_n_germ(3)
    for d in (0, Fraction(1, 3), HALF):
        assert eval_or_limit_at_1(zeta(graph, d)) == RationalExpr(3 * L + 1)
        assert eval_or_limit_at_1(zeta(graph, d, "euler")) == 4


def test_value_at_s1_of_a_curve_of_higher_genus():
    graph = create_high_genus_germ(2, -1)
    # (L-1)/(L^-2-1) = -L^2/(L+1)
    expected = symbol("E") * RationalExpr(LaurentExpr.monomial(-1, L=2), [L + 1])
    assert eval_or_limit_at_1(zeta(graph, 1)) == expected
    assert eval_or_limit_at_1(zeta(graph, 1, "euler")) == 1


def test_cycles_have_a_double_pole():
    graph = create_cycle_germ(3)
    for level in ("motivic", "hodge", "euler"):
        assert eval_or_limit_at_1(zeta(graph, HALF, level)) == PoleReport(2)


def test_strictly_lc_germs_have_a_simple_pole():
    assert eval_or_limit_at_1(zeta(create_h_chain_germ(0), HALF, "euler")) == PoleReport(1)
    assert eval_or_limit_at_1(zeta(create_lc_star_germ(), Fraction(3, 4), "euler")) == PoleReport(1)


def test_tangent_branch_value_at_s1():
    z = zeta(create_tangent_branch_germ(2), 1, "euler")
    # 2/s^2 - 1/s is regular at s = 1
    assert eval_or_limit_at_1(z) == 1


def test_constant_in_s():
    assert is_constant_in_s(zeta(create_a_n_germ(2), HALF))
    assert is_constant_in_s(zeta(create_a_n_germ(2), HALF, "euler"))
    assert not is_constant_in_s(zeta(create_high_genus_germ(), 1))
    assert not is_constant_in_s(zeta(create_cycle_germ(2), HALF, "euler"))
