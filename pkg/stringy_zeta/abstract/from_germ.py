"""
Surface germs seen as stratified data, and the blow-up cross-check between the
graph operations and the abstract transformation.
"""
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Tuple

from ..errors import NotApplicable
from ..mmp import PartialModel, create_partial_model, run_mmp
from ..stringy.zeta import Level
from ..surface.graph import ResolutionGraph
from ..surface.modifications import InteriorSite, Site, blow_up, fresh_vertex_id, sites
from ..surface.strata import curve_symbols, fiber_strata
from ..symbolic.laurent import LaurentExpr
from .blowup import Center, blowup_transform
from .stratified import StratifiedResolution, StratumClass, create_stratified_resolution
from .zeta import zeta_abstract

logger = logging.getLogger(__name__)


def stratification_of_model(model: PartialModel) -> StratifiedResolution:
    """
    The germ's exceptional fiber as stratified data, with (nu, N) from ``model``.

    The empty index set carries class 0 (the smooth germ: the point itself).
    """
    graph = model.base
    strata: List[StratumClass] = []
    for stratum in fiber_strata(graph):
        strata.append(
            StratumClass(
                divisors=frozenset(stratum.divisors),
                motivic=stratum.motivic,
                hodge=stratum.hodge,
                euler=stratum.euler,
            )
        )
    if not any(not stratum.divisors for stratum in strata):
        empty = StratumClass(divisors=frozenset(), motivic=LaurentExpr(), hodge=LaurentExpr(), euler=Fraction(0))
        strata.insert(0, empty)
    return create_stratified_resolution(
        graph.name,
        dimension=2,
        complete=False,
        divisors=[(entry.id, entry.nu, entry.N) for entry in model.divisors],
        strata=strata,
        symbols=curve_symbols(graph),
    )


def center_of_site(site: Site) -> Center:
    """A point of the fiber as a codimension-2 center, with class 1 on every level."""
    if isinstance(site, InteriorSite):
        containing = frozenset({site.vertex})
    else:
        containing = frozenset({site.first, site.second})
    one = LaurentExpr.constant(1)
    point = StratumClass(divisors=containing, motivic=one, hodge=one, euler=Fraction(1))
    return Center(containing=containing, codimension=2, strata=(point,))


def _strata_map(data: StratifiedResolution) -> Dict[FrozenSet[str], Tuple[object, ...]]:
    return {
        stratum.divisors: (stratum.motivic, stratum.hodge, stratum.euler)
        for stratum in data.strata
        if stratum.divisors and not stratum.is_zero()
    }


@dataclass(frozen=True)
class BlowupCheck:
    """
    Attributes:
        site: The blown-up point
        new_id: Id of the new curve
        divisors_agree: (nu, N) from the abstract transform equal those of the
            model on the blown-up graph, divisor by divisor
        strata_agree: Both routes give the same fiber strata
        zeta_agree: Zeta before equals zeta after, per level
    """

    site: Site
    new_id: str
    divisors_agree: bool
    strata_agree: bool
    zeta_agree: Tuple[Tuple[Level, bool], ...]

    @property
    def passed(self) -> bool:
        return self.divisors_agree and self.strata_agree and all(ok for _, ok in self.zeta_agree)


def blowup_crosscheck(model: PartialModel, site: Site) -> BlowupCheck:
    """
    Blow up one point of the fiber through both the graph and the abstract route.

    The new curve is exceptional over the model, so on the blown-up graph it is
    contracted along with the model's curves.
    """
    graph = model.base
    new_id = fresh_vertex_id(graph)
    blown = blow_up(graph, site, new_id=new_id)
    lifted = create_partial_model(blown, model.d, model.contracted + (new_id,))

    before = stratification_of_model(model)
    transformed = blowup_transform(before, center_of_site(site), new_id=new_id)
    direct = stratification_of_model(lifted)

    expected = {divisor.id: (divisor.nu, divisor.N) for divisor in direct.divisors}
    divisors_agree = {divisor.id: (divisor.nu, divisor.N) for divisor in transformed.divisors} == expected
    strata_agree = _strata_map(transformed) == _strata_map(direct)

    zeta_agree = []
    for level in Level:
        ok = zeta_abstract(before, level).value == zeta_abstract(direct, level).value
        zeta_agree.append((level, ok))

    result = BlowupCheck(
        site=site,
        new_id=new_id,
        divisors_agree=divisors_agree,
        strata_agree=strata_agree,
        zeta_agree=tuple(zeta_agree),
    )
    if not result.passed:
        logger.warning("blow-up cross-check failed for %s at %s", graph.name, site)
    return result


def random_blowup_checks(
    graph: ResolutionGraph, d: Fraction, *, trials: int, seed: Optional[int] = None
) -> List[BlowupCheck]:
    """
    Cross-check ``trials`` blow-ups at random points of the fiber of the d-minimal model.

    Successive trials blow up the previous result, so later sites include
    points of earlier exceptional curves.
    """
    rng = random.Random(seed)
    model = run_mmp(graph, d)
    if not model.base.vertices:
        raise NotApplicable(f"{graph.name!r} has no exceptional curve to blow up on")
    results = []
    for _ in range(trials):
        site = rng.choice(sites(model.base))
        check = blowup_crosscheck(model, site)
        results.append(check)
        blown = blow_up(model.base, site, new_id=check.new_id)
        model = create_partial_model(blown, model.d, model.contracted + (check.new_id,))
    return results
