"""
Wiring of the surface factories for one germ and one boundary weight d.
"""
import logging
from fractions import Fraction
from functools import cached_property
from typing import Dict, Tuple, Union

from .mmp import PartialModel, canonical_model, run_mmp
from .stringy import Level, StringyZeta, batyrev_expression, eval_or_limit_at_1, stringy_invariants, zeta_of_model
from .stringy.evaluation import S1Value
from .stringy.invariants import SurfaceInvariants
from .surface import Classification, DiscrepancyVector, ResolutionGraph, classify, log_discrepancies
from .symbolic import RationalExpr

logger = logging.getLogger(__name__)


class GermPipeline:
    """
    Every computation on a germ, each done once and shared.

    Args:
        graph: The germ's resolution graph
        d: Coefficient of the reduced exceptional divisor on the models
    """

    def __init__(self, graph: ResolutionGraph, d: Union[int, Fraction] = 1) -> None:
        self.graph = graph
        self.d = Fraction(d)
        self._zetas: Dict[Tuple[Level, bool], StringyZeta] = {}

    @cached_property
    def discrepancies(self) -> DiscrepancyVector:
        return log_discrepancies(self.graph)

    @cached_property
    def classification(self) -> Classification:
        return classify(self.graph)

    @cached_property
    def minimal_model(self) -> PartialModel:
        model = run_mmp(self.graph, self.d)
        logger.info("%s: d-minimal model at d=%s contracts %s", self.graph.name, self.d, list(model.contracted))
        return model

    @cached_property
    def canonical_model(self) -> PartialModel:
        return canonical_model(self.graph, self.d)

    @cached_property
    def invariants(self) -> SurfaceInvariants:
        return stringy_invariants(self.graph)

    def zeta(self, level: Union[Level, str] = Level.MOTIVIC, *, canonical: bool = False) -> StringyZeta:
        key = (Level(level), canonical)
        if key not in self._zetas:
            model = self.canonical_model if canonical else self.minimal_model
            self._zetas[key] = zeta_of_model(model, key[0])
        return self._zetas[key]

    def at_s1(self, level: Union[Level, str] = Level.MOTIVIC, *, canonical: bool = False) -> S1Value:
        return eval_or_limit_at_1(self.zeta(level, canonical=canonical))

    def batyrev(self, level: Union[Level, str] = Level.MOTIVIC) -> Union[RationalExpr, Fraction]:
        return batyrev_expression(self.graph, level)
