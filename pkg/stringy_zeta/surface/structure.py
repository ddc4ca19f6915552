"""
Structure of the minimal log resolution of a non-lc surface germ: the connected
core of curves with negative log discrepancy, with chains of rational curves
attached along which the discrepancies increase towards 1.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Set, Tuple

from ..errors import NotApplicable, StructureViolation
from .discrepancies import Classification, classify, log_discrepancies
from .graph import ResolutionGraph
from .modifications import minimize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ZeroDiscrepancyCurve:
    id: str
    neighbours: Tuple[str, ...]


@dataclass(frozen=True)
class StructureReport:
    """
    Attributes:
        core: Curves with a_i < 0, in graph order
        chains: Attached chains, each listed from the curve meeting the core outwards
        zero_curves: Curves with a_i = 0 and the one or two curves they meet
    """

    core: Tuple[str, ...]
    chains: Tuple[Tuple[str, ...], ...]
    zero_curves: Tuple[ZeroDiscrepancyCurve, ...]


def _components(graph: ResolutionGraph, members: Set[str]) -> List[List[str]]:
    remaining = [vertex_id for vertex_id in graph.ids if vertex_id in members]
    seen: Set[str] = set()
    components = []
    for start in remaining:
        if start in seen:
            continue
        component = []
        frontier = [start]
        seen.add(start)
        while frontier:
            current = frontier.pop()
            component.append(current)
            for neighbour in graph.neighbours(current):
                if neighbour in members and neighbour not in seen:
                    seen.add(neighbour)
                    frontier.append(neighbour)
        components.append(sorted(component, key=graph.index))
    return components


def _ordered_chain(graph: ResolutionGraph, component: List[str], core: Set[str]) -> Tuple[str, ...]:
    members = set(component)
    attachments = [
        (vertex_id, neighbour)
        for vertex_id in component
        for neighbour in graph.neighbours(vertex_id)
        if neighbour in core
    ]
    if len(attachments) != 1:
        raise StructureViolation(
            f"curves {component} meet the core {len(attachments)} times instead of once"
        )
    start = attachments[0][0]
    chain = [start]
    previous = None
    current = start
    while True:
        inner = [n for n in graph.neighbours(current) if n in members]
        if len(inner) > 2 or (current == start and len(inner) > 1):
            raise StructureViolation(f"curves {component} do not form a chain attached at an end")
        following = [n for n in inner if n != previous]
        if not following:
            break
        if len(following) > 1 or following[0] in chain:
            raise StructureViolation(f"curves {component} do not form a chain")
        previous, current = current, following[0]
        chain.append(current)
    if len(chain) != len(component):
        raise StructureViolation(f"curves {component} do not form a chain")
    return tuple(chain)


def structure_decomposition(graph: ResolutionGraph) -> StructureReport:
    """
    Decompose the minimal log resolution of a non-lc germ into core and chains.

    Args:
        graph: Minimal resolution graph without branches

    Returns:
        The core, the attached chains and the zero-discrepancy curves

    Raises:
        NotApplicable: if the germ is log canonical or carries branches
        StructureViolation: if the data does not have the expected shape
    """
    if graph.branches:
        raise NotApplicable("the structure decomposition is defined for germs without boundary branches")
    if classify(graph) is not Classification.NOT_LC:
        raise NotApplicable(f"{graph.name!r} is log canonical")
    if minimize(graph) != graph:
        raise StructureViolation(f"{graph.name!r} is not the minimal log resolution")

    discrepancies = log_discrepancies(graph).as_dict()
    core = {vertex_id for vertex_id in graph.ids if discrepancies[vertex_id] < 0}
    if len(_components(graph, core)) != 1:
        raise StructureViolation("curves with negative log discrepancy are not connected")

    chains = []
    for component in _components(graph, set(graph.ids) - core):
        chain = _ordered_chain(graph, component, core)
        values = [discrepancies[vertex_id] for vertex_id in chain]
        for vertex_id in chain:
            if graph.vertex(vertex_id).genus != 0:
                raise StructureViolation(f"chain curve {vertex_id!r} is not rational")
        if any(later <= earlier for earlier, later in zip(values, values[1:])) or values[-1] >= 1:
            raise StructureViolation(f"discrepancies along chain {list(chain)} are not increasing below 1")
        chains.append(chain)

    zero_curves = []
    for vertex_id in graph.ids:
        if discrepancies[vertex_id] == 0:
            neighbours = tuple(graph.neighbours(vertex_id))
            if graph.vertex(vertex_id).genus != 0 or len(neighbours) not in (1, 2):
                raise StructureViolation(f"zero-discrepancy curve {vertex_id!r} has the wrong shape")
            zero_curves.append(ZeroDiscrepancyCurve(id=vertex_id, neighbours=neighbours))

    logger.info("%s: core %s, %d chain(s)", graph.name, sorted(core, key=graph.index), len(chains))
    return StructureReport(
        core=tuple(sorted(core, key=graph.index)),
        chains=tuple(chains),
        zero_curves=tuple(zero_curves),
    )
