"""
Strata of the exceptional fiber of a germ, with their classes on all three levels.

Germ semantics: strata are intersected with the fiber over the singular point,
so each curve contributes an open curve and every other stratum is a point.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from ..symbolic.laurent import LaurentExpr
from ..symbolic.symbols import StratumSymbol
from .graph import ResolutionGraph


@dataclass(frozen=True)
class FiberStratum:
    """
    Attributes:
        divisors: Ids of the divisors (curves and branches) containing the stratum
        motivic: Class in the Grothendieck-style ring
        hodge: Hodge polynomial in u, v
        euler: Euler characteristic
    """

    divisors: Tuple[str, ...]
    motivic: LaurentExpr
    hodge: LaurentExpr
    euler: Fraction


def curve_symbols(graph: ResolutionGraph) -> Dict[str, StratumSymbol]:
    """One symbol per curve of positive genus, named after the curve."""
    return {
        vertex.id: StratumSymbol.curve(vertex.id, vertex.genus)
        for vertex in graph.vertices
        if vertex.genus > 0
    }


def fiber_strata(graph: ResolutionGraph) -> Tuple[FiberStratum, ...]:
    """
    Open strata of the exceptional fiber.

    Args:
        graph: The resolution graph

    Returns:
        Curve strata (class of the curve minus its incidence), one stratum per
        pair of intersecting curves (class = number of intersection points) and
        one point per branch attachment; the smooth germ is the single point
        of the empty index set
    """
    if graph.is_smooth_germ():
        one = LaurentExpr.constant(1)
        return (FiberStratum(divisors=(), motivic=one, hodge=one, euler=Fraction(1)),)

    symbols = curve_symbols(graph)
    strata = []
    for vertex in graph.vertices:
        incidence = graph.incidence(vertex.id)
        if vertex.genus == 0:
            motivic = LaurentExpr.monomial(L=1) + 1 - incidence
            hodge = LaurentExpr.monomial(u=1, v=1) + 1 - incidence
        else:
            motivic = LaurentExpr.monomial(symbols={vertex.id: 1}) - incidence
            hodge = symbols[vertex.id].hodge - incidence
        strata.append(
            FiberStratum(
                divisors=(vertex.id,),
                motivic=motivic,
                hodge=hodge,
                euler=Fraction(2 - 2 * vertex.genus - incidence),
            )
        )

    points: Dict[Tuple[str, str], int] = {}
    for edge in graph.edges:
        points[edge] = points.get(edge, 0) + 1
    for edge, count in points.items():
        value = LaurentExpr.constant(count)
        strata.append(FiberStratum(divisors=edge, motivic=value, hodge=value, euler=Fraction(count)))

    for branch in graph.branches:
        one = LaurentExpr.constant(1)
        strata.append(
            FiberStratum(divisors=(branch.attach, branch.id), motivic=one, hodge=one, euler=Fraction(1))
        )
    return tuple(strata)
