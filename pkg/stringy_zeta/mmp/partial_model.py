"""
Partial contractions of a resolution graph, with every intersection number on
the (singular) model computed through Mumford pull-backs on the fixed resolution.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from ..errors import AlreadyContracted, ModelViolation, SiteNotFound
from ..surface.discrepancies import DiscrepancyVector, canonical_rhs, log_discrepancies
from ..surface.graph import ResolutionGraph
from ..surface.intersection import inverse_exact

logger = logging.getLogger(__name__)

Coefficients = Tuple[Tuple[str, Fraction], ...]


@dataclass(frozen=True)
class DivisorData:
    """
    One row of the (nu, N, a) table.

    Attributes:
        kind: "remaining", "contracted" or "branch"; "divisor" for abstract data
    """

    id: str
    kind: str
    nu: Fraction
    N: Fraction
    a: Fraction


@dataclass(frozen=True)
class PartialModel:
    """
    The model obtained from ``base`` by contracting the curves in ``contracted``.

    Attributes:
        base: The resolution graph Y
        contracted: Contracted curves, in graph order
        d: Coefficient of the reduced exceptional divisor F of the model
        discrepancies: Log discrepancies a_i on Y
        pullbacks: For each remaining curve F_j, the coefficients of h^*F_j on
            the contracted curves
        log_coefficients: Coefficients c_i of h^*(K + B^m + dF) on the contracted
            curves, so that nu_i = 1 - c_i
        intersections: (K + B^m + dF).F_j on the model, for each remaining curve
        divisors: The (nu, N, a) table, curves in graph order then branches
    """

    base: ResolutionGraph
    contracted: Tuple[str, ...]
    d: Fraction
    discrepancies: DiscrepancyVector
    pullbacks: Tuple[Tuple[str, Coefficients], ...]
    log_coefficients: Coefficients
    intersections: Coefficients
    divisors: Tuple[DivisorData, ...]

    @property
    def remaining(self) -> Tuple[str, ...]:
        return tuple(vertex_id for vertex_id in self.base.ids if vertex_id not in self.contracted)

    def row(self, divisor_id: str) -> DivisorData:
        for entry in self.divisors:
            if entry.id == divisor_id:
                return entry
        raise KeyError(divisor_id)

    def nu_N_pairs(self) -> Dict[str, Tuple[Fraction, Fraction]]:
        return {entry.id: (entry.nu, entry.N) for entry in self.divisors}

    def pullback(self, vertex_id: str) -> Dict[str, Fraction]:
        """h^*F_j as a divisor on Y (coefficient 1 on E_j itself)."""
        coefficients = dict(dict(self.pullbacks)[vertex_id])
        coefficients[vertex_id] = Fraction(1)
        return coefficients

    def log_intersection(self, vertex_id: str) -> Fraction:
        return dict(self.intersections)[vertex_id]

    def model_intersection_matrix(self) -> Tuple[Tuple[Fraction, ...], ...]:
        """F_j.F_k on the model, computed as h^*F_j . E_k on Y."""
        entries = self.base.matrix.entries
        index = self.base.index
        rows = []
        for first in self.remaining:
            pulled = self.pullback(first)
            rows.append(
                tuple(
                    sum(
                        (coefficient * entries[index(curve)][index(second)] for curve, coefficient in pulled.items()),
                        Fraction(0),
                    )
                    for second in self.remaining
                )
            )
        return tuple(rows)


def _check_d(d: Fraction) -> Fraction:
    d = Fraction(d)
    if not 0 <= d <= 1:
        raise ValueError(f"d must lie in [0, 1], got {d}")
    return d


def create_partial_model(
    graph: ResolutionGraph, d: Fraction, contracted: Sequence[str] = ()
) -> PartialModel:
    """
    Compute every pull-back and the (nu, N) table for a given contracted set.

    Args:
        graph: The resolution graph Y
        d: Coefficient of the reduced exceptional divisor on the model
        contracted: Curves contracted by h : Y -> model

    Returns:
        The PartialModel

    Raises:
        SiteNotFound: if a contracted id is not a curve of ``graph``
        ModelViolation: if nu + N differs from a (non-realizable data)
    """
    d = _check_d(d)
    for vertex_id in contracted:
        if not graph.has_vertex(vertex_id):
            raise SiteNotFound(f"no curve {vertex_id!r} in {graph.name!r}")
    members = set(contracted)
    contracted_ids = tuple(vertex_id for vertex_id in graph.ids if vertex_id in members)
    remaining = tuple(vertex_id for vertex_id in graph.ids if vertex_id not in members)

    entries = graph.matrix.entries
    position = graph.index
    canonical = dict(zip(graph.ids, canonical_rhs(graph)))
    inverse = inverse_exact([[entries[position(i)][position(k)] for k in contracted_ids] for i in contracted_ids])

    def solve(rhs: List[Fraction]) -> List[Fraction]:
        return [sum((row[k] * rhs[k] for k in range(len(rhs))), Fraction(0)) for row in inverse]

    pullbacks = []
    for j in remaining:
        solution = solve([Fraction(-entries[position(j)][position(i)]) for i in contracted_ids])
        pullbacks.append((j, tuple(zip(contracted_ids, solution))))

    rhs = [
        -canonical[i] - d * sum(entries[position(j)][position(i)] for j in remaining)
        for i in contracted_ids
    ]
    log_coefficients = tuple(zip(contracted_ids, solve(rhs)))
    c = dict(log_coefficients)

    intersections = tuple(
        (
            j,
            canonical[j]
            + d * sum(entries[position(k)][position(j)] for k in remaining)
            + sum((c[i] * entries[position(i)][position(j)] for i in contracted_ids), Fraction(0)),
        )
        for j in remaining
    )

    discrepancies = log_discrepancies(graph)
    a = discrepancies.as_dict()
    discrepancy_divisor = {j: a[j] - 1 + d for j in remaining}
    contracted_N = {i: Fraction(0) for i in contracted_ids}
    for j, coefficients in pullbacks:
        for i, coefficient in coefficients:
            contracted_N[i] += discrepancy_divisor[j] * coefficient

    divisors = []
    for vertex_id in graph.ids:
        if vertex_id in members:
            nu, N, kind = 1 - c[vertex_id], contracted_N[vertex_id], "contracted"
        else:
            nu, N, kind = 1 - d, discrepancy_divisor[vertex_id], "remaining"
        divisors.append(DivisorData(id=vertex_id, kind=kind, nu=nu, N=N, a=a[vertex_id]))
    for branch in graph.branches:
        divisors.append(DivisorData(id=branch.id, kind="branch", nu=1 - branch.coefficient, N=Fraction(0), a=a[branch.id]))

    for entry in divisors:
        if entry.nu + entry.N != entry.a:
            raise ModelViolation(f"nu + N != a for {entry.id!r}: {entry.nu} + {entry.N} != {entry.a}")

    logger.debug("model of %s contracting %s at d=%s", graph.name, contracted_ids, d)
    return PartialModel(
        base=graph,
        contracted=contracted_ids,
        d=d,
        discrepancies=discrepancies,
        pullbacks=tuple(pullbacks),
        log_coefficients=log_coefficients,
        intersections=intersections,
        divisors=tuple(divisors),
    )


def contract(model: PartialModel, vertex_id: str) -> PartialModel:
    """
    Contract one more curve.

    Raises:
        AlreadyContracted: if ``vertex_id`` is already contracted
    """
    if vertex_id in model.contracted:
        raise AlreadyContracted(f"{vertex_id!r} is already contracted")
    return create_partial_model(model.base, model.d, model.contracted + (vertex_id,))
