from fractions import Fraction

from stringy_zeta.pipeline import GermPipeline
from stringy_zeta.stringy import Level
from stringy_zeta.surface import Classification
from stringy_zeta.surface.catalog import create_a_n_germ, create_lc_star_germ, create_tangent_branch_germ

HALF = Fraction(1, 2)


def test_results_are_computed_once():
    pipeline = GermPipeline(create_tangent_branch_germ(2))
    assert pipeline.minimal_model is pipeline.minimal_model
    assert pipeline.zeta("euler") is pipeline.zeta(Level.EULER)
    assert pipeline.zeta("euler") is not pipeline.zeta("euler", canonical=True)


def test_tangent_branch_at_d_one():
    pipeline = GermPipeline(create_tangent_branch_germ(2), 1)
    assert pipeline.classification is Classification.NOT_LC
    assert pipeline.minimal_model.contracted == ("E1",)
    assert pipeline.at_s1("euler") == 1


def test_canonical_model_of_the_lc_star():
    pipeline = GermPipeline(create_lc_star_germ(), HALF)
    assert pipeline.minimal_model.contracted == ()
    assert pipeline.canonical_model.contracted == ("E1", "E2", "E3")
    assert pipeline.zeta("euler").value == pipeline.zeta("euler", canonical=True).value


def test_batyrev_and_value_at_s1_of_a_klt_germ():
    pipeline = GermPipeline(create_a_n_germ(3))
    assert pipeline.batyrev("euler") == 4
    assert pipeline.at_s1("euler") == 4
