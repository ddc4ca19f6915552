"""
Blow-ups and blow-downs of resolution graphs.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from ..errors import SiteNotFound
from .graph import Branch, ResolutionGraph, Vertex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InteriorSite:
    """A generic point of a curve (away from all other curves and branches)."""

    vertex: str


@dataclass(frozen=True)
class EdgeSite:
    """The ``index``-th intersection point of two curves."""

    first: str
    second: str
    index: int = 0


Site = Union[InteriorSite, EdgeSite]


def fresh_vertex_id(graph: ResolutionGraph, prefix: str = "F") -> str:
    taken = set(graph.ids) | set(graph.branch_ids)
    counter = 1
    while f"{prefix}{counter}" in taken:
        counter += 1
    return f"{prefix}{counter}"


def _decremented(vertex: Vertex, amount: int = 1) -> Vertex:
    return Vertex(id=vertex.id, genus=vertex.genus, self_intersection=vertex.self_intersection - amount)


def blow_up(graph: ResolutionGraph, site: Site, *, new_id: Optional[str] = None) -> ResolutionGraph:
    """
    Blow up a point of the exceptional fiber.

    Args:
        graph: The resolution graph
        site: A generic point of a curve, or an intersection point of two curves
        new_id: Id of the new (-1)-curve; a fresh ``F<n>`` id by default

    Returns:
        The graph of the blown-up resolution, with the new curve appended

    Raises:
        SiteNotFound: if the curve or the intersection point does not exist
    """
    new_id = new_id or fresh_vertex_id(graph)
    new_vertex = Vertex(id=new_id, genus=0, self_intersection=-1)

    if isinstance(site, InteriorSite):
        if not graph.has_vertex(site.vertex):
            raise SiteNotFound(f"no curve {site.vertex!r} in {graph.name!r}")
        vertices = tuple(
            _decremented(vertex) if vertex.id == site.vertex else vertex for vertex in graph.vertices
        )
        edges = graph.edges + ((site.vertex, new_id),)
    else:
        first, second = site.first, site.second
        if not (graph.has_vertex(first) and graph.has_vertex(second)) or first == second:
            raise SiteNotFound(f"no intersection of {first!r} and {second!r} in {graph.name!r}")
        if not 0 <= site.index < graph.edge_count(first, second):
            raise SiteNotFound(
                f"{first!r} and {second!r} meet in {graph.edge_count(first, second)} point(s); "
                f"index {site.index} is out of range"
            )
        pair = (first, second) if graph.index(first) < graph.index(second) else (second, first)
        edges_list = list(graph.edges)
        edges_list.remove(pair)
        vertices = tuple(
            _decremented(vertex) if vertex.id in (first, second) else vertex for vertex in graph.vertices
        )
        edges = tuple(edges_list) + ((first, new_id), (new_id, second))

    logger.debug("blow-up of %s at %s creates %s", graph.name, site, new_id)
    return ResolutionGraph(
        name=graph.name,
        vertices=vertices + (new_vertex,),
        edges=edges,
        branches=graph.branches,
    )


def sites(graph: ResolutionGraph) -> List[Site]:
    """Every interior site and every intersection point of ``graph``, in graph order."""
    result: List[Site] = [InteriorSite(vertex.id) for vertex in graph.vertices]
    counted: dict = {}
    for first, second in graph.edges:
        index = counted.get((first, second), 0)
        result.append(EdgeSite(first, second, index))
        counted[(first, second)] = index + 1
    return result


def _contractible(graph: ResolutionGraph, vertex: Vertex) -> bool:
    if vertex.genus != 0 or vertex.self_intersection != -1:
        return False
    neighbours = graph.neighbours(vertex.id)
    attached = graph.branches_on(vertex.id)
    if len(neighbours) + len(attached) > 2:
        return False
    if len(neighbours) == 2 and neighbours[0] == neighbours[1]:
        return False
    if attached:
        return len(attached) == 1 and len(neighbours) == 1
    return True


def _contract(graph: ResolutionGraph, vertex: Vertex) -> ResolutionGraph:
    neighbours = graph.neighbours(vertex.id)
    vertices = tuple(
        Vertex(id=other.id, genus=other.genus, self_intersection=other.self_intersection + neighbours.count(other.id))
        for other in graph.vertices
        if other.id != vertex.id
    )
    edges: Tuple[Tuple[str, str], ...] = tuple(edge for edge in graph.edges if vertex.id not in edge)
    if len(neighbours) == 2:
        edges += ((neighbours[0], neighbours[1]),)
    branches = tuple(
        Branch(id=branch.id, coefficient=branch.coefficient, attach=neighbours[0])
        if branch.attach == vertex.id
        else branch
        for branch in graph.branches
    )
    return ResolutionGraph(name=graph.name, vertices=vertices, edges=edges, branches=branches)


def minimize(graph: ResolutionGraph) -> ResolutionGraph:
    """
    Contract (-1)-curves until the resolution is the minimal log resolution.

    A rational (-1)-curve is contracted when it meets at most two other
    components (curves or branches), its two neighbours are distinct, and a
    branch on it has exactly one neighbouring curve to move to.

    Args:
        graph: A valid resolution graph

    Returns:
        The fixpoint; the empty graph when everything contracts to a smooth point
    """
    current = graph
    while True:
        candidate = next((vertex for vertex in current.vertices if _contractible(current, vertex)), None)
        if candidate is None:
            return current
        logger.debug("contracting (-1)-curve %s of %s", candidate.id, current.name)
        current = _contract(current, candidate)
