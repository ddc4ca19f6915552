"""
The relative log MMP on surface germs: d-minimal and d-canonical models.
"""
import logging
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from ..errors import ModelViolation, StrictlyLcAtDOne
from ..surface.discrepancies import Classification, classify
from ..surface.graph import ResolutionGraph
from .partial_model import PartialModel, contract, create_partial_model

logger = logging.getLogger(__name__)


def _next_curve(model: PartialModel, order: Optional[Sequence[str]], *, strict: bool) -> Optional[str]:
    values = dict(model.intersections)
    candidates = [j for j in model.remaining if (values[j] < 0 if strict else values[j] == 0)]
    if not candidates:
        return None
    if order is None:
        return candidates[0]
    priority = {vertex_id: position for position, vertex_id in enumerate(order)}
    return min(candidates, key=lambda j: (priority.get(j, len(priority)), model.base.index(j)))


def _check_d_one(model: PartialModel) -> None:
    for entry in model.divisors:
        if entry.kind == "branch":
            continue
        if entry.nu == 0 and entry.N == 0:
            raise StrictlyLcAtDOne(
                f"{entry.id!r} has log discrepancy 0 on the log minimal model of {model.base.name!r}; use d < 1"
            )
        if entry.kind == "remaining" and entry.a > 0:
            raise ModelViolation(f"remaining curve {entry.id!r} has a = {entry.a} > 0 at d = 1")
        if entry.kind == "contracted" and entry.nu < 0:
            raise ModelViolation(f"contracted curve {entry.id!r} has negative log discrepancy")


def run_mmp(
    graph: ResolutionGraph, d: Fraction, *, order: Optional[Sequence[str]] = None
) -> PartialModel:
    """
    Contract (K + B^m + dF)-negative curves until the log divisor is nef.

    Args:
        graph: The resolution graph
        d: Coefficient of the reduced exceptional divisor, 0 <= d <= 1
        order: Optional priority among negative curves; the lowest graph index
            is contracted first by default

    Returns:
        The d-minimal model (the log minimal model when d = 1)

    Raises:
        StrictlyLcAtDOne: if d = 1 and the germ or its model has a strictly lc point
    """
    d = Fraction(d)
    if d == 1 and classify(graph) is Classification.STRICTLY_LC:
        raise StrictlyLcAtDOne(f"{graph.name!r} is strictly log canonical; use d < 1")

    model = create_partial_model(graph, d)
    for _ in range(len(graph.vertices)):
        vertex_id = _next_curve(model, order, strict=True)
        if vertex_id is None:
            break
        logger.debug(
            "contracting %s with (K + B + dF).F = %s at d=%s",
            vertex_id,
            model.log_intersection(vertex_id),
            d,
        )
        model = contract(model, vertex_id)

    if any(value < 0 for _, value in model.intersections):
        raise ModelViolation("log divisor is still not nef after contracting every curve")

    if d < 1:
        for entry in model.divisors:
            if entry.kind == "contracted" and not entry.nu > 1 - d:
                raise ModelViolation(f"contracted curve {entry.id!r} has log discrepancy {entry.nu} <= 1 - d")
    else:
        _check_d_one(model)

    logger.info("d-minimal model of %s at d=%s contracts %s", graph.name, d, list(model.contracted))
    return model


def contraction_thresholds(graph: ResolutionGraph, d: Fraction) -> Tuple[Fraction, ...]:
    """
    Weights in [0, 1] at which a log intersection tested by ``run_mmp(graph, d)`` vanishes.

    On a fixed contracted set every (K + B^m + dF).F_j is affine in d. Between
    consecutive thresholds the run takes the same steps, so it returns the
    same contracted set.
    """
    d = Fraction(d)
    thresholds = set()
    contracted: Tuple[str, ...] = ()
    while True:
        at_zero = create_partial_model(graph, Fraction(0), contracted).intersections
        at_one = create_partial_model(graph, Fraction(1), contracted).intersections
        for (_, low), (_, high) in zip(at_zero, at_one):
            if low != high and 0 <= low / (low - high) <= 1:
                thresholds.add(low / (low - high))
        vertex_id = _next_curve(create_partial_model(graph, d, contracted), None, strict=True)
        if vertex_id is None:
            break
        contracted += (vertex_id,)
    return tuple(sorted(thresholds))


def model_near_one(graph: ResolutionGraph) -> PartialModel:
    """
    The d-minimal model shared by every d in an interval (d0, 1).

    Starting from d = 0, d jumps halfway from the largest threshold below 1 to
    1 until no threshold of the run at d lies in [d, 1).
    """
    d = Fraction(0)
    while True:
        crossings = [t for t in contraction_thresholds(graph, d) if d <= t < 1]
        if not crossings:
            logger.debug("contracted set of %s is constant on [%s, 1)", graph.name, d)
            return run_mmp(graph, d)
        d = (max(crossings) + 1) / 2


def canonical_model(graph: ResolutionGraph, d: Fraction) -> PartialModel:
    """
    Contract further every remaining curve on which the log divisor is trivial.

    Returns:
        The d-canonical model, on which the log divisor is relatively ample
    """
    model = run_mmp(graph, d)
    while True:
        vertex_id = _next_curve(model, None, strict=False)
        if vertex_id is None:
            break
        logger.debug("contracting log-trivial curve %s", vertex_id)
        model = contract(model, vertex_id)

    floor = 1 - model.d
    for entry in model.divisors:
        if entry.kind == "contracted" and entry.nu < floor:
            raise ModelViolation(f"contracted curve {entry.id!r} has log discrepancy {entry.nu} < 1 - d")

    logger.info("d-canonical model of %s at d=%s contracts %s", graph.name, d, list(model.contracted))
    return model


def nu_N(model: PartialModel) -> Dict[str, Tuple[Fraction, Fraction]]:
    """
    (nu, N) for every curve and branch of the model, re-checking nu + N = a.
    """
    table: Dict[str, Tuple[Fraction, Fraction]] = {}
    for entry in model.divisors:
        if entry.nu + entry.N != entry.a:
            raise ModelViolation(f"nu + N != a for {entry.id!r}")
        table[entry.id] = (entry.nu, entry.N)
    return table
