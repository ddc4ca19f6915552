"""
Blowing up a stratified resolution along a smooth center.
"""
import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Tuple

from ..errors import InconsistentCenter
from ..stringy.zeta import ClassValue, Level
from ..symbolic.laurent import LaurentExpr
from .oracle import hyperplane_stratum_class
from .stratified import Divisor, StratifiedResolution, StratumClass, complete_levels

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Center:
    """
    A smooth center Z of codimension r lying in exactly the divisors ``containing``.

    Attributes:
        containing: The divisors J containing Z (|J| <= r)
        codimension: r >= 2
        strata: Classes of Z meet E_I for index sets I containing J; other
            index sets carry no part of Z
        total: Optional class of Z itself, checked against the strata
    """

    containing: FrozenSet[str]
    codimension: int
    strata: Tuple[StratumClass, ...]
    total: Optional[StratumClass] = None


def _zero(level: Level) -> ClassValue:
    return Fraction(0) if level is Level.EULER else LaurentExpr()


def _check_center(data: StratifiedResolution, center: Center, levels: Tuple[Level, ...]) -> None:
    ids = set(data.ids)
    if not center.containing <= ids:
        raise InconsistentCenter(f"center lies in unknown divisors {sorted(center.containing - ids)}")
    if center.codimension < 2:
        raise InconsistentCenter("the center must have codimension at least 2")
    if len(center.containing) > center.codimension:
        raise InconsistentCenter("a center of codimension r lies in at most r divisors")
    seen = set()
    for stratum in center.strata:
        if not center.containing <= stratum.divisors or not stratum.divisors <= ids:
            raise InconsistentCenter(f"center stratum {sorted(stratum.divisors)} does not contain {sorted(center.containing)}")
        if stratum.divisors in seen:
            raise InconsistentCenter(f"center stratum {sorted(stratum.divisors)} is listed twice")
        seen.add(stratum.divisors)
        host = data.stratum(stratum.divisors)
        if host is None and not stratum.is_zero():
            raise InconsistentCenter(f"the center meets the empty stratum {sorted(stratum.divisors)}")
    if center.total is not None:
        for level in levels:
            if not center.total.has(level):
                continue
            parts = [stratum.at(level) for stratum in center.strata]
            total = sum(parts[1:], parts[0]) if parts else 0
            if total != center.total.at(level):
                raise InconsistentCenter(f"center strata do not add up to the class of the center ({level.value})")


def blowup_transform(
    data: StratifiedResolution, center: Center, *, new_id: str = "F"
) -> StratifiedResolution:
    """
    Stratified data of the blow-up of Y along a center.

    Over a point of Z meeting E_I, the fiber P^(r-1) is cut by the m strict
    transforms of the divisors in J as general hyperplanes; the divisors of
    I outside J contain the whole fiber. A point of Z meet E_I therefore
    contributes [Z meet E_I] * A_K to the stratum (I - J) + K + {new}, where A_K
    is the class of the points of P^(r-1) on exactly the hyperplanes K.

    Args:
        data: The stratified resolution
        center: The center, with its strata classes on the working levels
        new_id: Id of the exceptional divisor

    Returns:
        The blown-up data, on the levels both inputs provide; the new divisor
        has nu = sum(nu_j - 1) + r and N = sum N_j over J

    Raises:
        InconsistentCenter: if the center data contradicts itself or the strata
    """
    if new_id in data.ids:
        raise InconsistentCenter(f"divisor id {new_id!r} is already taken")
    center = replace(
        center,
        strata=tuple(complete_levels(stratum, data.symbols) for stratum in center.strata),
        total=complete_levels(center.total, data.symbols) if center.total is not None else None,
    )
    levels = tuple(
        level for level in data.levels() if all(stratum.has(level) for stratum in center.strata)
    )
    if not levels:
        raise InconsistentCenter("the center and the strata share no level")
    _check_center(data, center, levels)

    containing = center.containing
    r = center.codimension
    m = len(containing)
    ordered_j = data.ordered(containing)

    classes: Dict[FrozenSet[str], Dict[Level, ClassValue]] = {
        stratum.divisors: {level: stratum.at(level) for level in levels} for stratum in data.strata
    }
    for piece in center.strata:
        target = classes.setdefault(piece.divisors, {level: _zero(level) for level in levels})
        for level in levels:
            target[level] = target[level] - piece.at(level)  # type: ignore[operator]
        rest = piece.divisors - containing
        for size in range(m + 1):
            factors = {level: hyperplane_stratum_class(r - 1, m, size, level) for level in levels}
            if not any(factors.values()):
                continue
            for subset in combinations(ordered_j, size):
                key = rest | frozenset(subset) | {new_id}
                bucket = classes.setdefault(key, {level: _zero(level) for level in levels})
                for level in levels:
                    bucket[level] = bucket[level] + piece.at(level) * factors[level]  # type: ignore[operator]

    divisors: List[Divisor] = list(data.divisors)
    nu = sum((data.divisor(j).nu - 1 for j in ordered_j), Fraction(0)) + r
    N = sum((data.divisor(j).N for j in ordered_j), Fraction(0))
    divisors.append(Divisor(id=new_id, nu=nu, N=N))

    strata = []
    for key, values in classes.items():
        if key and not any(values.values()):
            continue
        strata.append(
            StratumClass(
                divisors=key,
                motivic=values.get(Level.MOTIVIC),  # type: ignore[arg-type]
                hodge=values.get(Level.HODGE),  # type: ignore[arg-type]
                euler=Fraction(values[Level.EULER]) if Level.EULER in values else None,
            )
        )

    logger.debug(
        "blew up %s along a codimension-%d center in %s: nu=%s N=%s",
        data.name,
        r,
        sorted(containing),
        nu,
        N,
    )
    return StratifiedResolution(
        name=data.name,
        dimension=data.dimension,
        complete=data.complete,
        divisors=tuple(divisors),
        strata=tuple(strata),
        symbols=data.symbols,
    )
