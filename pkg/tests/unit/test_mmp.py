from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from stringy_zeta.errors import AlreadyContracted, SiteNotFound, StrictlyLcAtDOne
from stringy_zeta.mmp import (
    canonical_model,
    contract,
    contraction_thresholds,
    create_partial_model,
    model_near_one,
    nu_N,
    run_mmp,
)
from stringy_zeta.surface import create_resolution_graph
from stringy_zeta.surface.catalog import (
    create_a_n_germ,
    create_elliptic_germ,
    create_h_chain_germ,
    create_high_genus_germ,
    create_lc_star_germ,
    create_star_germ,
    create_tangent_branch_germ,
)
from tests.strategies import BOUNDARY_WEIGHTS, germs

HALF = Fraction(1, 2)
LEGS = ("E1", "E2", "E3")


def test_pullback_through_a_single_minus_two_curve():
    model = create_partial_model(create_tangent_branch_germ(2), 1, ["E1"])
    assert model.pullback("E2") == {"E1": HALF, "E2": 1}
    assert model.pullback("E0") == {"E1": 0, "E0": 1}


def test_pullback_of_the_chain_in_an_h_shaped_germ():
    model = create_partial_model(create_h_chain_germ(1), HALF, ["E1", "E2", "E3", "E4"])
    assert model.pullback("E5") == {"E1": HALF, "E2": HALF, "E3": 0, "E4": 0, "E5": 1}
    assert model.pullback("E6") == {"E1": 0, "E2": 0, "E3": HALF, "E4": HALF, "E6": 1}


def test_model_intersection_numbers_after_contraction():
    # F.F on the model is E5^2 plus 1/2 for each of the four legs
    model = create_partial_model(create_h_chain_germ(0), HALF, ["E1", "E2", "E3", "E4"])
    assert model.model_intersection_matrix() == ((Fraction(-1),),)


def test_contracting_twice_is_rejected():
    model = create_partial_model(create_a_n_germ(1), 0, ["E1"])
    with pytest.raises(AlreadyContracted):
        contract(model, "E1")


def test_partial_model_arguments_are_checked():
    with pytest.raises(SiteNotFound):
        create_partial_model(create_a_n_germ(1), 0, ["E9"])
    with pytest.raises(ValueError):
        create_partial_model(create_a_n_germ(1), Fraction(3, 2))


@pytest.mark.parametrize(
    "graph,d,expected",
    [
        (create_a_n_germ(1), 1, ("E1",)),
        (create_a_n_germ(3), HALF, ("E1", "E2", "E3")),
        (create_high_genus_germ(), 1, ()),
        (create_tangent_branch_germ(2), 1, ("E1",)),
        (create_tangent_branch_germ(2), HALF, ("E1", "E2")),
        (create_h_chain_germ(1), HALF, ("E1", "E2", "E3", "E4")),
        (create_h_chain_germ(1), 0, ()),
        (create_lc_star_germ(), Fraction(1, 4), ()),
        (create_lc_star_germ(), HALF, ()),
        (create_lc_star_germ(), Fraction(3, 4), LEGS),
        (create_star_germ([[-2], [-3], [-6]]), Fraction(9, 10), LEGS),
    ],
)
def test_contracted_sets(graph, d, expected):
    assert run_mmp(graph, d).contracted == expected


def test_strictly_lc_germs_have_no_model_at_d_one():
    with pytest.raises(StrictlyLcAtDOne):
        run_mmp(create_elliptic_germ(2), 1)
    with pytest.raises(StrictlyLcAtDOne):
        run_mmp(create_lc_star_germ(), 1)


def test_log_intersection_of_the_star_legs():
    model = run_mmp(create_lc_star_germ(), Fraction(1, 4))
    assert model.log_intersection("E1") == HALF


def test_canonical_model_contracts_log_trivial_curves():
    graph = create_lc_star_germ()
    assert canonical_model(graph, HALF).contracted == LEGS
    assert canonical_model(graph, Fraction(1, 4)).contracted == ()
    assert canonical_model(graph, HALF).row("E1").nu == HALF


def test_nu_N_of_contracted_star_legs():
    table = nu_N(run_mmp(create_lc_star_germ(), Fraction(3, 4)))
    assert table["E1"] == (Fraction(5, 12), Fraction(-1, 12))
    assert table["E"] == (Fraction(1, 4), Fraction(-1, 4))


def test_nu_N_of_the_h_shaped_germ():
    table = nu_N(run_mmp(create_h_chain_germ(3), HALF))
    assert table["E1"] == (Fraction(3, 4), Fraction(-1, 4))
    assert table["E7"] == (HALF, -HALF)


@pytest.mark.parametrize("kappa", [1, 2, 3, 5])
def test_nu_N_with_a_boundary_branch(kappa):
    table = nu_N(run_mmp(create_tangent_branch_germ(kappa), 1))
    assert table == {
        "E0": (0, Fraction(-1, kappa)),
        "E1": (HALF, Fraction(-1, kappa)),
        "E2": (0, Fraction(-2, kappa)),
        "B": (HALF, 0),
    }


@given(st.data())
def test_minimal_model_does_not_depend_on_the_order(data):
    graph = data.draw(germs(max_vertices=6))
    d = data.draw(st.sampled_from(BOUNDARY_WEIGHTS))
    reference = run_mmp(graph, d)
    for _ in range(5):
        order = data.draw(st.permutations(graph.ids))
        model = run_mmp(graph, d, order=order)
        assert set(model.contracted) == set(reference.contracted)
        assert nu_N(model) == nu_N(reference)


@given(st.data())
def test_minimal_model_factors_through_canonical(data):
    graph = data.draw(germs(max_vertices=6))
    d = data.draw(st.sampled_from(BOUNDARY_WEIGHTS))
    minimal = run_mmp(graph, d)
    canonical = canonical_model(graph, d)
    assert set(minimal.contracted) <= set(canonical.contracted)
    for entry in canonical.divisors:
        if entry.kind == "contracted":
            assert entry.nu >= 1 - Fraction(d)


@given(st.data())
def test_nu_plus_N_is_the_log_discrepancy(data):
    graph = data.draw(germs())
    d = data.draw(st.sampled_from(BOUNDARY_WEIGHTS))
    for entry in run_mmp(graph, d).divisors:
        assert entry.nu + entry.N == entry.a


def test_thresholds_of_a_single_minus_three_curve():
    # (K + dE).E = 1 - 3d
    graph = create_resolution_graph("single", vertices=[("E", 0, -3)])
    assert contraction_thresholds(graph, 0) == (Fraction(1, 3),)
    assert run_mmp(graph, Fraction(1, 3)).contracted == ()
    assert run_mmp(graph, Fraction(2, 5)).contracted == ("E",)
    assert model_near_one(graph).contracted == ("E",)


@pytest.mark.parametrize("kappa", [1, 2, 3, 5])
def test_model_near_one_of_the_tangent_branch_germs(kappa):
    graph = create_tangent_branch_germ(kappa)
    model = model_near_one(graph)
    assert set(model.contracted) == {"E1", "E2"}
    assert not [t for t in contraction_thresholds(graph, model.d) if model.d <= t < 1]
    assert set(run_mmp(graph, 1 - Fraction(1, 10**6)).contracted) == set(model.contracted)


@given(germs(max_vertices=5), st.sampled_from(BOUNDARY_WEIGHTS))
def test_contracted_set_is_constant_between_thresholds(graph, d):
    thresholds = contraction_thresholds(graph, d)
    assume(d not in thresholds)
    upper = min([t for t in thresholds if t > d], default=Fraction(1))
    assert run_mmp(graph, (d + upper) / 2).contracted == run_mmp(graph, d).contracted
