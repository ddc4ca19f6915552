"""
Resolution-independent invariants built from log discrepancies alone: Batyrev's
stringy invariants (all a_i nonzero) and the surface invariants of non-lc germs,
which add explicit terms for curves with a_i = 0.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from ..errors import NotApplicable, ZeroDiscrepancy
from ..surface.discrepancies import Classification, classify, log_discrepancies
from ..surface.graph import ResolutionGraph
from ..surface.modifications import minimize
from ..surface.strata import curve_symbols, fiber_strata
from ..surface.structure import structure_decomposition
from ..symbolic import RationalExpr, SymbolTable, zeta_factor
from .zeta import ClassValue, Level, assemble

logger = logging.getLogger(__name__)


def _stratum_terms(
    graph: ResolutionGraph, level: Level, skip: Tuple[str, ...] = ()
) -> List[Tuple[ClassValue, List[Tuple[Fraction, Fraction]]]]:
    """Fiber strata paired with (a_i, 0) for every divisor, so the factors read (L-1)/(L^a-1)."""
    a = log_discrepancies(graph).as_dict()
    terms: List[Tuple[ClassValue, List[Tuple[Fraction, Fraction]]]] = []
    for stratum in fiber_strata(graph):
        if any(divisor in skip for divisor in stratum.divisors):
            continue
        if level is Level.MOTIVIC:
            stratum_class: ClassValue = stratum.motivic
        elif level is Level.HODGE:
            stratum_class = stratum.hodge
        else:
            stratum_class = stratum.euler
        terms.append((stratum_class, [(a[divisor], Fraction(0)) for divisor in stratum.divisors]))
    return terms


def batyrev_expression(
    graph: ResolutionGraph, level: Union[Level, str] = Level.MOTIVIC
) -> Union[RationalExpr, Fraction]:
    """
    Sum over fiber strata of [E_I] * prod (L-1)/(L^(a_i)-1).

    Args:
        graph: A resolution graph, branches allowed
        level: "motivic" for the motivic expression, "hodge" for the E-function
            in u, v, "euler" for the stringy Euler number

    Returns:
        A RationalExpr, or a rational at the Euler level

    Raises:
        ZeroDiscrepancy: if some curve or branch has a_i = 0
    """
    level = Level(level)
    discrepancies = log_discrepancies(graph)
    for divisor_id, value in discrepancies.vertices + discrepancies.branches:
        if value == 0:
            raise ZeroDiscrepancy(f"{divisor_id!r} has log discrepancy 0 on {graph.name!r}")

    value = assemble(_stratum_terms(graph, level), level)
    if level is Level.EULER:
        return value.evaluate(0)  # type: ignore[union-attr]
    return value  # type: ignore[return-value]


@dataclass(frozen=True)
class SurfaceInvariants:
    """
    Attributes:
        motivic: The stringy E-invariant in L and curve symbols
        euler: The stringy Euler number
        symbols: Curve symbols of the minimal log resolution
        minimal: The minimal log resolution the invariants were computed on
        was_minimal: Whether the input already was that resolution
    """

    motivic: RationalExpr
    euler: Fraction
    symbols: SymbolTable
    minimal: ResolutionGraph
    was_minimal: bool


def stringy_invariants(graph: ResolutionGraph) -> SurfaceInvariants:
    """
    Stringy E-invariant and stringy Euler number of a non-lc surface germ.

    Strata avoiding the zero-discrepancy curves Z contribute as in Batyrev's
    formula (their classes are open in the whole fiber); every E_i in Z adds
    kappa_i (L-1)^2 / ((L^(a_i1)-1)(L^(a_i2)-1)), where E_i1, E_i2 are the curves
    it meets and a_i2 = 1 when it meets only one.

    Args:
        graph: Any resolution graph of the germ, without branches

    Returns:
        The invariants, computed on the minimal log resolution

    Raises:
        NotApplicable: if the germ carries branches or is log canonical
    """
    if graph.branches:
        raise NotApplicable("the surface invariants are defined for germs without boundary")
    minimal = minimize(graph)
    was_minimal = minimal == graph
    if not was_minimal:
        logger.warning(
            "%s is not the minimal log resolution; using it after %d contraction(s)",
            graph.name,
            len(graph.vertices) - len(minimal.vertices),
        )
    if classify(minimal) is not Classification.NOT_LC:
        raise NotApplicable(f"{graph.name!r} is log canonical")

    report = structure_decomposition(minimal)
    a = log_discrepancies(minimal).as_dict()
    zero_ids = tuple(curve.id for curve in report.zero_curves)

    motivic = assemble(_stratum_terms(minimal, Level.MOTIVIC, zero_ids), Level.MOTIVIC)
    euler = assemble(_stratum_terms(minimal, Level.EULER, zero_ids), Level.EULER).evaluate(0)  # type: ignore[union-attr]
    for curve in report.zero_curves:
        kappa = -minimal.vertex(curve.id).self_intersection
        first = a[curve.neighbours[0]]
        second = a[curve.neighbours[1]] if len(curve.neighbours) == 2 else Fraction(1)
        motivic = motivic + kappa * zeta_factor(first, 0) * zeta_factor(second, 0)  # type: ignore[operator]
        euler += Fraction(kappa) / (first * second)

    logger.info("surface invariants of %s: e = %s", graph.name, euler)
    return SurfaceInvariants(
        motivic=motivic,  # type: ignore[arg-type]
        euler=euler,
        symbols=curve_symbols(minimal),
        minimal=minimal,
        was_minimal=was_minimal,
    )
