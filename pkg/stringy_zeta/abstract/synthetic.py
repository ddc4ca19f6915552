"""
Complete stratified resolutions assembled from simple smooth projective pieces:
points, projective spaces cut by general hyperplanes, and curves with marked
points. Products of such pieces keep the divisors simple normal crossing.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

from ..stringy.zeta import Level
from ..symbolic import StratumSymbol
from ..symbolic.laurent import LaurentExpr
from .oracle import hyperplane_stratum_class
from .stratified import StratifiedResolution, StratumClass, create_stratified_resolution


@dataclass(frozen=True)
class Block:
    """
    Attributes:
        dimension: Dimension of the piece
        divisors: Ids of its divisors
        strata: Hodge class of every nonempty open stratum, keyed by index set
    """

    dimension: int
    divisors: Tuple[str, ...]
    strata: Tuple[Tuple[FrozenSet[str], LaurentExpr], ...]


def point_block() -> Block:
    return Block(dimension=0, divisors=(), strata=((frozenset(), LaurentExpr.constant(1)),))


def projective_block(n: int, hyperplanes: int = 0, *, prefix: str = "H") -> Block:
    """P^n with ``hyperplanes`` general hyperplanes as divisors."""
    if n < 1:
        raise ValueError("projective space needs n >= 1")
    ids = tuple(f"{prefix}{i}" for i in range(1, hyperplanes + 1))
    strata = []
    for size in range(min(n, hyperplanes) + 1):
        value = hyperplane_stratum_class(n, hyperplanes, size, Level.HODGE)
        for subset in combinations(ids, size):
            strata.append((frozenset(subset), value))
    return Block(dimension=n, divisors=ids, strata=tuple(strata))  # type: ignore[arg-type]


def curve_block(genus: int, points: int = 0, *, prefix: str = "P") -> Block:
    """A smooth projective curve of the given genus with ``points`` marked points as divisors."""
    hodge = StratumSymbol.curve("C", genus).hodge
    ids = tuple(f"{prefix}{i}" for i in range(1, points + 1))
    one = LaurentExpr.constant(1)
    strata = [(frozenset(), hodge - points)] + [(frozenset({i}), one) for i in ids]
    return Block(dimension=1, divisors=ids, strata=tuple(strata))


def product(blocks: Iterable[Block]) -> Block:
    """Cartesian product: strata are products of strata, divisors are pulled back."""
    result = point_block()
    for block in blocks:
        clash = set(result.divisors) & set(block.divisors)
        if clash:
            raise ValueError(f"divisor ids {sorted(clash)} occur in two factors")
        strata = []
        for first, first_class in result.strata:
            for second, second_class in block.strata:
                value = first_class * second_class
                if value or not (first | second):
                    strata.append((first | second, value))
        result = Block(
            dimension=result.dimension + block.dimension,
            divisors=result.divisors + block.divisors,
            strata=tuple(strata),
        )
    return result


def synthetic_resolution(
    block: Block,
    weights: Sequence[Tuple[Fraction, Fraction]],
    *,
    name: str = "synthetic",
    hodge_override: Optional[Dict[FrozenSet[str], LaurentExpr]] = None,
) -> StratifiedResolution:
    """
    A complete stratified resolution on ``block`` with (nu, N) = ``weights[i]`` on its i-th divisor.

    ``hodge_override`` replaces individual stratum classes, which is how
    datasets violating duality are built.
    """
    if len(weights) != len(block.divisors):
        raise ValueError("one (nu, N) pair per divisor is required")
    if block.dimension < 1:
        raise ValueError("a resolution has positive dimension")
    overrides = hodge_override or {}
    strata = [
        StratumClass(divisors=key, hodge=overrides.get(key, value)) for key, value in block.strata
    ]
    return create_stratified_resolution(
        name,
        dimension=block.dimension,
        complete=True,
        divisors=[(i, Fraction(nu), Fraction(N)) for i, (nu, N) in zip(block.divisors, weights)],
        strata=strata,
    )
