"""
Factories for the germs that recur in fixtures and tests.
"""
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .graph import ResolutionGraph, create_resolution_graph


def create_a_n_germ(n: int) -> ResolutionGraph:
    """
    Chain of n rational (-2)-curves (the A_n singularity, klt).
    """
    if n < 1:
        raise ValueError("A_n needs n >= 1")
    vertices = [(f"E{i}", 0, -2) for i in range(1, n + 1)]
    edges = [(f"E{i}", f"E{i + 1}") for i in range(1, n)]
    return create_resolution_graph(f"A{n}", vertices=vertices, edges=edges)


def create_elliptic_germ(kappa: int = 2) -> ResolutionGraph:
    """
    A simple elliptic singularity: one elliptic curve with self-intersection -kappa.
    """
    return create_resolution_graph(f"elliptic-kappa{kappa}", vertices=[("E", 1, -kappa)])


def create_high_genus_germ(genus: int = 2, self_intersection: int = -1) -> ResolutionGraph:
    return create_resolution_graph(
        f"genus{genus}-self{self_intersection}",
        vertices=[("E", genus, self_intersection)],
    )


def create_zero_chain_germ() -> ResolutionGraph:
    """
    Elliptic (-1)-curve with a rational (-2)-leg: a = (-1, 0), a non-lc germ
    whose minimal resolution carries a zero-discrepancy chain curve.
    """
    return create_resolution_graph(
        "zero-chain",
        vertices=[("E0", 1, -1), ("E1", 0, -2)],
        edges=[("E0", "E1")],
    )


def create_cycle_germ(
    length: int, self_intersections: Optional[Sequence[int]] = None
) -> ResolutionGraph:
    """
    A closed chain of rational curves; two curves meeting twice when ``length`` is 2.

    Args:
        length: Number of curves r >= 2
        self_intersections: Self-intersections (<= -2, at least one <= -3);
            all -3 by default
    """
    if length < 2:
        raise ValueError("a closed chain needs at least two curves")
    values = list(self_intersections) if self_intersections is not None else [-3] * length
    if len(values) != length:
        raise ValueError("one self-intersection per curve is required")
    vertices = [(f"E{i}", 0, values[i - 1]) for i in range(1, length + 1)]
    edges = [(f"E{i}", f"E{i % length + 1}") for i in range(1, length + 1)]
    return create_resolution_graph(f"cycle-{length}", vertices=vertices, edges=edges)


def create_h_chain_germ(k: int, chain_self_intersection: int = -3) -> ResolutionGraph:
    """
    Four rational (-2)-curves E1..E4 around a chain E5..E(5+k): E1, E2 meet E5
    and E3, E4 meet E(5+k).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    chain = [f"E{i}" for i in range(5, 6 + k)]
    vertices: List[Tuple[str, int, int]] = [(f"E{i}", 0, -2) for i in range(1, 5)]
    vertices += [(vertex_id, 0, chain_self_intersection) for vertex_id in chain]
    edges = [("E1", chain[0]), ("E2", chain[0]), ("E3", chain[-1]), ("E4", chain[-1])]
    edges += list(zip(chain, chain[1:]))
    return create_resolution_graph(f"h-chain-k{k}", vertices=vertices, edges=edges)


def create_star_germ(
    legs: Sequence[Sequence[int]], center_self_intersection: int = -2, name: Optional[str] = None
) -> ResolutionGraph:
    """
    A rational central curve E with chains of rational curves attached.

    Args:
        legs: Self-intersections of each chain, listed from E outwards
        center_self_intersection: E^2
        name: Germ name; derived from the legs by default
    """
    vertices: List[Tuple[str, int, int]] = [("E", 0, center_self_intersection)]
    edges: List[Tuple[str, str]] = []
    counter = 0
    for leg in legs:
        previous = "E"
        for value in leg:
            counter += 1
            vertex_id = f"E{counter}"
            vertices.append((vertex_id, 0, value))
            edges.append((previous, vertex_id))
            previous = vertex_id
    label = name or "star-" + "-".join("_".join(str(-value) for value in leg) for leg in legs)
    return create_resolution_graph(label, vertices=vertices, edges=edges)


def create_lc_star_germ(center_self_intersection: int = -2) -> ResolutionGraph:
    """Central rational curve with three rational (-3)-curves attached."""
    return create_star_germ([[-3], [-3], [-3]], center_self_intersection, name="lc-star")


def create_tangent_branch_germ(kappa0: int) -> ResolutionGraph:
    """
    Simple elliptic germ with a boundary branch tangent to E0, resolved: E0
    (elliptic, -kappa0-2), E1 (-2), E2 (-1), edges E2-E0 and E2-E1, and the
    branch B with coefficient 1/2 through E2.
    """
    if kappa0 < 1:
        raise ValueError("kappa0 must be positive")
    return create_resolution_graph(
        f"tangent-branch-kappa{kappa0}",
        vertices=[("E0", 1, -kappa0 - 2), ("E1", 0, -2), ("E2", 0, -1)],
        edges=[("E2", "E0"), ("E2", "E1")],
        branches=[("B", Fraction(1, 2), "E2")],
    )
