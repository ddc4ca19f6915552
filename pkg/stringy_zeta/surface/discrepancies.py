"""
Log discrepancies of a resolution graph and the klt / strictly-lc / not-lc trichotomy.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Tuple

from .graph import ResolutionGraph
from .intersection import solve_exact

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiscrepancyVector:
    """
    Log discrepancies a_i of the exceptional curves and 1 - b of the branches,
    in graph order.
    """

    vertices: Tuple[Tuple[str, Fraction], ...]
    branches: Tuple[Tuple[str, Fraction], ...] = ()

    def __getitem__(self, divisor_id: str) -> Fraction:
        for key, value in self.vertices + self.branches:
            if key == divisor_id:
                return value
        raise KeyError(divisor_id)

    def as_dict(self) -> Dict[str, Fraction]:
        return dict(self.vertices + self.branches)


class Classification(str, Enum):
    KLT = "klt"
    STRICTLY_LC = "strictly-lc"
    NOT_LC = "not-lc"


def canonical_rhs(graph: ResolutionGraph) -> Tuple[Fraction, ...]:
    """(2g_j - 2 - E_j^2) + sum of branch coefficients on E_j, for every vertex j."""
    rhs = []
    for vertex in graph.vertices:
        value = Fraction(2 * vertex.genus - 2 - vertex.self_intersection)
        value += sum((branch.coefficient for branch in graph.branches_on(vertex.id)), Fraction(0))
        rhs.append(value)
    return tuple(rhs)


def log_discrepancies(graph: ResolutionGraph) -> DiscrepancyVector:
    """
    Solve K_Y = pi^*(K_X + B) + sum (a_i - 1) E_i on the resolution.

    Intersecting with every E_j gives M x = r with x_i = a_i - 1, where r_j is
    K_Y.E_j plus the branch contributions B.E_j.

    Args:
        graph: A valid resolution graph

    Returns:
        The log discrepancies of all curves and branches
    """
    solution = solve_exact(graph.matrix.entries, canonical_rhs(graph))
    vertex_values = tuple((vertex.id, value + 1) for vertex, value in zip(graph.vertices, solution))
    branch_values = tuple((branch.id, 1 - branch.coefficient) for branch in graph.branches)
    logger.debug("log discrepancies of %s: %s", graph.name, vertex_values)
    return DiscrepancyVector(vertices=vertex_values, branches=branch_values)


def classify(graph: ResolutionGraph) -> Classification:
    """
    klt iff every a_i > 0, strictly-lc iff every a_i >= 0 with some a_i = 0, not-lc otherwise.

    Branch coefficients are < 1 by construction, so only the curves decide.
    """
    values = [value for _, value in log_discrepancies(graph).vertices]
    if all(value > 0 for value in values):
        return Classification.KLT
    if all(value >= 0 for value in values):
        return Classification.STRICTLY_LC
    return Classification.NOT_LC
