"""
Intersection matrices of resolution graphs and exact linear solves against them.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, List, Sequence, Tuple

import sympy

from ..symbolic.univariate import to_fraction, to_sympy_rational

if TYPE_CHECKING:
    from .graph import ResolutionGraph, Vertex


@dataclass(frozen=True)
class IntersectionMatrix:
    """
    Integer intersection matrix in vertex order plus Mumford's germ verdict.

    Attributes:
        entries: Rows of the matrix
        leading_minors: Determinants of the leading k x k blocks, k = 1..n
        negative_definite: True iff sign(minor_k) = (-1)^k for every k
    """

    entries: Tuple[Tuple[int, ...], ...]
    leading_minors: Tuple[int, ...]
    negative_definite: bool


def matrix_entries(
    vertices: Sequence["Vertex"], edges: Iterable[Tuple[str, str]]
) -> Tuple[Tuple[int, ...], ...]:
    index = {vertex.id: position for position, vertex in enumerate(vertices)}
    rows: List[List[int]] = [[0] * len(vertices) for _ in vertices]
    for position, vertex in enumerate(vertices):
        rows[position][position] = vertex.self_intersection
    for first, second in edges:
        i, j = index[first], index[second]
        rows[i][j] += 1
        rows[j][i] += 1
    return tuple(tuple(row) for row in rows)


def analyse(entries: Tuple[Tuple[int, ...], ...]) -> IntersectionMatrix:
    matrix = sympy.Matrix(entries)
    minors = []
    for size in range(1, len(entries) + 1):
        minors.append(int(matrix[:size, :size].det(method="bareiss")))
    negative_definite = all(
        minor != 0 and (minor < 0) == (size % 2 == 1) for size, minor in enumerate(minors, start=1)
    )
    return IntersectionMatrix(entries=entries, leading_minors=tuple(minors), negative_definite=negative_definite)


def intersection_matrix(graph: "ResolutionGraph") -> IntersectionMatrix:
    """
    Intersection matrix of the exceptional curves of ``graph``.

    Args:
        graph: The resolution graph

    Returns:
        The matrix with its leading principal minors and negative-definiteness verdict
    """
    return analyse(matrix_entries(graph.vertices, graph.edges))


def solve_exact(
    entries: Sequence[Sequence[int]], rhs: Sequence[Fraction]
) -> List[Fraction]:
    """
    Solve ``entries * x = rhs`` over Q and assert a zero residual.

    Args:
        entries: A nonsingular square integer matrix
        rhs: Right-hand side

    Returns:
        The exact solution
    """
    if not entries:
        return []
    matrix = sympy.Matrix(entries)
    vector = sympy.Matrix([to_sympy_rational(value) for value in rhs])
    solution = matrix.LUsolve(vector)
    if matrix * solution != vector:
        raise ArithmeticError("exact solve left a nonzero residual")
    return [to_fraction(value) for value in solution]


def inverse_exact(entries: Sequence[Sequence[int]]) -> List[List[Fraction]]:
    if not entries:
        return []
    inverse = sympy.Matrix(entries).inv()
    return [[to_fraction(inverse[i, j]) for j in range(inverse.cols)] for i in range(inverse.rows)]
