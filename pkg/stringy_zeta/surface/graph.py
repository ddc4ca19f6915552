"""
Dual graphs of log resolutions of normal surface singularity germs.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from ..errors import InvalidGraph, NotAGerm
from .intersection import IntersectionMatrix, analyse, matrix_entries

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Vertex:
    id: str
    genus: int
    self_intersection: int


@dataclass(frozen=True)
class Branch:
    """Strict transform of a boundary component, meeting ``attach`` in one generic point."""

    id: str
    coefficient: Fraction
    attach: str


@dataclass(frozen=True)
class ResolutionGraph:
    """
    Exceptional curves (vertices), their intersection points (edges, repeated for
    multi-edges) and the boundary branches of a germ.

    Edges are stored with endpoints in vertex order and sorted, so two graphs
    describing the same configuration compare equal. The constructor validates
    the graph and raises NotAGerm when the intersection matrix is not negative
    definite.
    """

    name: str
    vertices: Tuple[Vertex, ...]
    edges: Tuple[Tuple[str, str], ...] = ()
    branches: Tuple[Branch, ...] = ()
    _index: Dict[str, int] = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)
    _matrix: IntersectionMatrix = field(default=None, init=False, repr=False, compare=False, hash=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "branches", tuple(self.branches))

        index: Dict[str, int] = {}
        for position, vertex in enumerate(self.vertices):
            if vertex.id in index:
                raise InvalidGraph(f"duplicate vertex id {vertex.id!r}")
            if vertex.genus < 0:
                raise InvalidGraph(f"vertex {vertex.id!r} has negative genus")
            index[vertex.id] = position
        object.__setattr__(self, "_index", index)

        normalized: List[Tuple[str, str]] = []
        for first, second in self.edges:
            if first not in index or second not in index:
                raise InvalidGraph(f"edge ({first}, {second}) references an unknown vertex")
            if first == second:
                raise InvalidGraph(f"loop at {first!r}: components of an snc divisor are smooth")
            pair = (first, second) if index[first] < index[second] else (second, first)
            normalized.append(pair)
        normalized.sort(key=lambda pair: (index[pair[0]], index[pair[1]]))
        object.__setattr__(self, "edges", tuple(normalized))

        seen = set(index)
        for branch in self.branches:
            if branch.id in seen:
                raise InvalidGraph(f"duplicate id {branch.id!r}")
            seen.add(branch.id)
            if branch.attach not in index:
                raise InvalidGraph(f"branch {branch.id!r} attaches to unknown vertex {branch.attach!r}")
            if not 0 <= branch.coefficient < 1:
                raise InvalidGraph(f"branch {branch.id!r} needs 0 <= b < 1, got {branch.coefficient}")

        self._check_connected()

        matrix = analyse(matrix_entries(self.vertices, self.edges))
        if not matrix.negative_definite:
            raise NotAGerm(
                f"intersection matrix of {self.name!r} is not negative definite "
                f"(leading minors {list(matrix.leading_minors)})"
            )
        object.__setattr__(self, "_matrix", matrix)

    def _check_connected(self) -> None:
        if not self.vertices:
            return
        adjacency: Dict[str, List[str]] = {vertex.id: [] for vertex in self.vertices}
        for first, second in self.edges:
            adjacency[first].append(second)
            adjacency[second].append(first)
        reached = {self.vertices[0].id}
        frontier = [self.vertices[0].id]
        while frontier:
            current = frontier.pop()
            for neighbour in adjacency[current]:
                if neighbour not in reached:
                    reached.add(neighbour)
                    frontier.append(neighbour)
        if len(reached) != len(self.vertices):
            raise InvalidGraph(f"graph {self.name!r} is not connected")

    # Lookups

    @property
    def matrix(self) -> IntersectionMatrix:
        return self._matrix

    @property
    def ids(self) -> Tuple[str, ...]:
        return tuple(vertex.id for vertex in self.vertices)

    @property
    def branch_ids(self) -> Tuple[str, ...]:
        return tuple(branch.id for branch in self.branches)

    def index(self, vertex_id: str) -> int:
        return self._index[vertex_id]

    def has_vertex(self, vertex_id: str) -> bool:
        return vertex_id in self._index

    def vertex(self, vertex_id: str) -> Vertex:
        return self.vertices[self._index[vertex_id]]

    def edge_count(self, first: str, second: str) -> int:
        pair = (first, second) if self._index[first] < self._index[second] else (second, first)
        return sum(1 for edge in self.edges if edge == pair)

    def neighbours(self, vertex_id: str) -> List[str]:
        """Adjacent vertices, repeated once per intersection point."""
        result = []
        for first, second in self.edges:
            if first == vertex_id:
                result.append(second)
            elif second == vertex_id:
                result.append(first)
        return result

    def branches_on(self, vertex_id: str) -> List[Branch]:
        return [branch for branch in self.branches if branch.attach == vertex_id]

    def incidence(self, vertex_id: str) -> int:
        """Edge endpoints plus branch attachments at ``vertex_id``."""
        return len(self.neighbours(vertex_id)) + len(self.branches_on(vertex_id))

    def is_smooth_germ(self) -> bool:
        return not self.vertices


def create_resolution_graph(
    name: str,
    *,
    vertices: Sequence[Tuple[str, int, int]],
    edges: Sequence[Tuple[str, str]] = (),
    branches: Sequence[Tuple[str, Fraction, str]] = (),
) -> ResolutionGraph:
    """
    Build a validated graph from plain tuples.

    Args:
        name: Germ name
        vertices: (id, genus, self_intersection) triples in order
        edges: Vertex-id pairs; repeat a pair for a multi-edge
        branches: (id, coefficient, attach) triples

    Returns:
        The validated ResolutionGraph
    """
    graph = ResolutionGraph(
        name=name,
        vertices=tuple(Vertex(id=v, genus=g, self_intersection=e) for v, g, e in vertices),
        edges=tuple((first, second) for first, second in edges),
        branches=tuple(Branch(id=b, coefficient=Fraction(c), attach=a) for b, c, a in branches),
    )
    logger.debug("built germ %s with %d curves", name, len(graph.vertices))
    return graph
