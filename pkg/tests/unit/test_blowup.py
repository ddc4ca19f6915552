from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import given, reject
from hypothesis import strategies as st

from stringy_zeta.abstract import (
    Center,
    StratumClass,
    blowup_crosscheck,
    blowup_transform,
    duality_check,
    projective_block,
    random_blowup_checks,
    stratification_of_model,
    synthetic_resolution,
    zeta_abstract,
)
from stringy_zeta.errors import InconsistentCenter, StrictlyLcAtDOne
from stringy_zeta.mmp import run_mmp
from stringy_zeta.stringy import zeta
from stringy_zeta.surface import EdgeSite, InteriorSite, blow_up
from stringy_zeta.surface.catalog import create_high_genus_germ, create_tangent_branch_germ
from stringy_zeta.symbolic import LaurentExpr
from tests.strategies import BOUNDARY_WEIGHTS, germ_sites, germs

ONE = LaurentExpr.constant(1)
K1, D1 = Fraction(3, 2), Fraction(1, 3)
K2, D2 = Fraction(2), Fraction(-1, 2)


@pytest.fixture
def two_lines():
    """P^2 with two lines H1, H2 carrying (nu, N) = (3/2, 1/3) and (2, -1/2)."""
    return synthetic_resolution(projective_block(2, 2), [(K1, D1), (K2, D2)], name="two-lines")


def point_center(*containing):
    key = frozenset(containing)
    return Center(containing=key, codimension=2, strata=(StratumClass(divisors=key, hodge=ONE),))


def test_blowing_up_the_intersection_point(two_lines):
    blown = blowup_transform(two_lines, point_center("H1", "H2"))
    new = blown.divisor("F")
    assert (new.nu, new.N) == (K1 + K2, D1 + D2)
    assert blown.stratum(["H1", "H2"]) is None
    assert blown.stratum(["H1", "F"]).hodge == ONE
    assert blown.stratum(["F"]).hodge == LaurentExpr.monomial(u=1, v=1) - 1


def test_blowing_up_a_point_of_one_line(two_lines):
    blown = blowup_transform(two_lines, point_center("H1"), new_id="G")
    new = blown.divisor("G")
    assert (new.nu, new.N) == (K1 + 1, D1)
    assert blown.stratum(["H1", "G"]).hodge == ONE
    assert blown.stratum(["G"]).hodge == LaurentExpr.monomial(u=1, v=1)


def test_blowing_up_a_point_off_the_divisors(two_lines):
    blown = blowup_transform(two_lines, point_center())
    new = blown.divisor("F")
    assert (new.nu, new.N) == (2, 0)
    assert blown.stratum(["F"]).hodge == LaurentExpr.monomial(u=1, v=1) + 1


@pytest.mark.parametrize("containing", [(), ("H1",), ("H1", "H2")])
def test_zeta_and_duality_survive_a_blow_up(two_lines, containing):
    blown = blowup_transform(two_lines, point_center(*containing))
    for level in ("hodge", "euler"):
        assert zeta_abstract(blown, level).value == zeta_abstract(two_lines, level).value
    assert duality_check(blown).passed


def test_inconsistent_centers_are_rejected(two_lines):
    with pytest.raises(InconsistentCenter):
        blowup_transform(two_lines, point_center("H9"))
    with pytest.raises(InconsistentCenter):
        blowup_transform(two_lines, point_center("H1"), new_id="H2")
    with pytest.raises(InconsistentCenter):
        blowup_transform(
            two_lines, Center(containing=frozenset({"H1"}), codimension=1, strata=())
        )
    with pytest.raises(InconsistentCenter):
        wrong_piece = StratumClass(divisors=frozenset({"H2"}), hodge=ONE)
        blowup_transform(two_lines, Center(containing=frozenset({"H1"}), codimension=2, strata=(wrong_piece,)))
    with pytest.raises(InconsistentCenter):
        total = StratumClass(divisors=frozenset({"H1"}), hodge=LaurentExpr.constant(2))
        blowup_transform(two_lines, replace(point_center("H1"), total=total))


def test_germ_blow_up_matches_the_graph_operation():
    model = run_mmp(create_tangent_branch_germ(2), 1)
    for site in (EdgeSite("E2", "E0"), InteriorSite("E0"), EdgeSite("E2", "E1")):
        check = blowup_crosscheck(model, site)
        assert check.divisors_agree
        assert check.strata_agree
        assert check.passed


def test_stratification_of_a_model_has_an_empty_stratum_of_class_zero():
    data = stratification_of_model(run_mmp(create_high_genus_germ(), 1))
    assert data.stratum([]).euler == 0
    assert not data.complete
    assert data.dimension == 2


def test_repeated_blow_ups_of_a_germ():
    checks = random_blowup_checks(create_high_genus_germ(), 1, trials=5, seed=7)
    assert len(checks) == 5
    assert all(check.passed for check in checks)


@given(germs(max_vertices=5), st.sampled_from(BOUNDARY_WEIGHTS), st.integers(0, 2**16))
def test_random_blow_ups_keep_the_zeta_function(graph, d, seed):
    for check in random_blowup_checks(graph, d, trials=2, seed=seed):
        assert check.passed


@given(
    germs(max_vertices=5),
    st.data(),
    st.sampled_from(BOUNDARY_WEIGHTS + (Fraction(1),)),
    st.sampled_from(["motivic", "hodge", "euler"]),
)
def test_zeta_of_a_blow_up_is_unchanged(graph, data, d, level):
    try:
        before = zeta(graph, d, level)
    except StrictlyLcAtDOne:
        reject()
    site = data.draw(germ_sites(graph))
    after = zeta(blow_up(graph, site), d, level)
    assert after.value == before.value
