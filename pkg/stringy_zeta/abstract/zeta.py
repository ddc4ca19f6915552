"""
Zeta functions of stratified resolutions, in open-strata and closed-strata form.
"""
import logging
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, Tuple, Union

from ..mmp import DivisorData
from ..stringy.zeta import ClassValue, Level, StringyZeta, ZetaValue, assemble, check_definable
from ..symbolic import RationalExpr, UniRationalFn, zeta_factor
from ..symbolic.laurent import LaurentExpr
from .stratified import StratifiedResolution

logger = logging.getLogger(__name__)


def divisor_table(data: StratifiedResolution) -> Tuple[DivisorData, ...]:
    return tuple(
        DivisorData(id=divisor.id, kind="divisor", nu=divisor.nu, N=divisor.N, a=divisor.a)
        for divisor in data.divisors
    )


def zeta_abstract(data: StratifiedResolution, level: Union[Level, str] = Level.MOTIVIC) -> StringyZeta:
    """
    Sum over strata of [E_I] * prod over I of (L-1)/(L^(nu_i + s N_i) - 1).

    Args:
        data: The stratified resolution
        level: "motivic", "hodge" or "euler"

    Returns:
        The StringyZeta (without a value of d)

    Raises:
        DefinabilityViolation: if a divisor has nu = N = 0
        MissingLevel: if some stratum has no class on ``level``
    """
    level = Level(level)
    table = divisor_table(data)
    check_definable(table)
    pairs = {divisor.id: (divisor.nu, divisor.N) for divisor in data.divisors}
    terms = [
        (stratum.at(level), [pairs[i] for i in data.ordered(stratum.divisors)])
        for stratum in data.strata
    ]
    value = assemble(terms, level)
    logger.info("assembled %s zeta of %s", level.value, data.name)
    return StringyZeta(level=level, value=value, d=None, name=data.name, table=table, symbols=data.symbols)


def closed_classes(data: StratifiedResolution, level: Union[Level, str]) -> Dict[FrozenSet[str], ClassValue]:
    """[E_I] = sum of [E_J] over the declared open strata J containing I."""
    level = Level(level)
    closed: Dict[FrozenSet[str], ClassValue] = {}
    for stratum in data.strata:
        value = stratum.at(level)
        members = data.ordered(stratum.divisors)
        for size in range(len(members) + 1):
            for subset in combinations(members, size):
                key = frozenset(subset)
                closed[key] = closed[key] + value if key in closed else value
    return closed


def closed_strata_form(data: StratifiedResolution, level: Union[Level, str] = Level.HODGE) -> ZetaValue:
    """
    The same zeta function written as sum over I of [E_I] * prod over I of (factor_i - 1).

    Expanding every product of factors as prod (1 + (factor - 1)) and regrouping
    by closed strata gives this form.
    """
    level = Level(level)
    pairs = {divisor.id: (divisor.nu, divisor.N) for divisor in data.divisors}
    check_definable(divisor_table(data))

    if level is Level.EULER:
        total = UniRationalFn(0)
        for key, value in closed_classes(data, level).items():
            term = UniRationalFn(Fraction(value))
            for i in data.ordered(key):
                term = term * (UniRationalFn.reciprocal_linear(*pairs[i]) - 1)
            total = total + term
        return total

    base = "uv" if level is Level.HODGE else "L"
    result = RationalExpr(0)
    for key, value in closed_classes(data, level).items():
        assert isinstance(value, LaurentExpr)
        term = RationalExpr(value)
        for i in data.ordered(key):
            term = term * (zeta_factor(*pairs[i], base=base) - 1)
        result = result + term
    return result
