"""
User-supplied stratified log resolutions of any dimension.

A dataset lists divisors with their (nu, N) and, for index sets I, the class of
the open stratum E_I on one or more levels. Missing levels are derived where
possible (motivic -> Hodge -> Euler); declared levels must agree.
"""
import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Tuple, Union

from ..errors import InconsistentLevels, InputError, MissingLevel
from ..stringy.zeta import ClassValue, Level
from ..symbolic import RationalExpr, StratumSymbol, SymbolTable, euler_value, hodge_specialize
from ..symbolic.laurent import LaurentExpr

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Divisor:
    id: str
    nu: Fraction
    N: Fraction

    @property
    def a(self) -> Fraction:
        return self.nu + self.N


@dataclass(frozen=True)
class StratumClass:
    """
    Class of the open stratum E_I on each level where it is known.

    Attributes:
        divisors: The index set I
        motivic: Laurent polynomial in L and stratum symbols
        hodge: Polynomial in u and v
        euler: Euler characteristic
    """

    divisors: FrozenSet[str]
    motivic: Optional[LaurentExpr] = None
    hodge: Optional[LaurentExpr] = None
    euler: Optional[Fraction] = None

    def at(self, level: Union[Level, str]) -> ClassValue:
        level = Level(level)
        value = getattr(self, level.value)
        if value is None:
            raise MissingLevel(f"stratum {sorted(self.divisors)} has no {level.value} class")
        return value

    def has(self, level: Union[Level, str]) -> bool:
        return getattr(self, Level(level).value) is not None

    def is_zero(self) -> bool:
        return not any(value for value in (self.motivic, self.hodge, self.euler) if value is not None)


def _hodge_of(motivic: LaurentExpr, symbols: SymbolTable) -> LaurentExpr:
    image = hodge_specialize(RationalExpr(motivic), symbols)
    if not image.is_laurent():
        raise InconsistentLevels("Hodge image of a stratum class is not a polynomial")
    return image.numerator


def _euler_of(value: LaurentExpr, symbols: SymbolTable) -> Fraction:
    result = euler_value(RationalExpr(value), symbols)
    if not isinstance(result, Fraction):
        raise InconsistentLevels("Euler image of a stratum class is undefined")
    return result


def complete_levels(stratum: StratumClass, symbols: SymbolTable) -> StratumClass:
    """
    Fill in the levels derivable from the declared ones and check agreement.

    Raises:
        InconsistentLevels: if two declared levels disagree after specialization
        MissingLevel: if the motivic class uses an undeclared symbol
    """
    motivic, hodge, euler = stratum.motivic, stratum.hodge, stratum.euler
    if motivic is not None and any(motivic.uses(name) for name in ("T", "u", "v")):
        raise InputError(f"motivic class of {sorted(stratum.divisors)} may only use L and symbols")
    if hodge is not None and (hodge.uses("L") or hodge.uses("T") or hodge.has_symbols()):
        raise InputError(f"Hodge class of {sorted(stratum.divisors)} must be a polynomial in u and v")
    if motivic is not None:
        unknown = [name for name in motivic.symbol_names() if name not in symbols]
        if unknown:
            raise MissingLevel(f"stratum {sorted(stratum.divisors)} uses undeclared symbols {unknown}")
        derived = _hodge_of(motivic, symbols)
        if hodge is None:
            hodge = derived
        elif hodge != derived:
            raise InconsistentLevels(f"motivic and Hodge classes of {sorted(stratum.divisors)} disagree")
    if hodge is not None:
        derived_euler = _euler_of(hodge, symbols)
        if euler is None:
            euler = derived_euler
        elif euler != derived_euler:
            raise InconsistentLevels(f"Hodge and Euler classes of {sorted(stratum.divisors)} disagree")
    return replace(stratum, motivic=motivic, hodge=hodge, euler=euler)


@dataclass(frozen=True)
class StratifiedResolution:
    """
    Attributes:
        name: Dataset name
        dimension: Dimension of the resolution Y
        complete: Whether Y is complete (required for duality)
        divisors: The divisors E_i with (nu_i, N_i)
        strata: One class per index set I, the empty set included
        symbols: Stratum symbols available to motivic classes
    """

    name: str
    dimension: int
    complete: bool
    divisors: Tuple[Divisor, ...]
    strata: Tuple[StratumClass, ...]
    symbols: Mapping[str, StratumSymbol] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.dimension <= 0:
            raise InputError("dimension must be positive")
        ids = [divisor.id for divisor in self.divisors]
        if len(set(ids)) != len(ids):
            raise InputError("divisor ids must be unique")
        seen = set()
        for stratum in self.strata:
            unknown = stratum.divisors - set(ids)
            if unknown:
                raise InputError(f"stratum refers to unknown divisors {sorted(unknown)}")
            if stratum.divisors in seen:
                raise InputError(f"stratum {sorted(stratum.divisors)} is listed twice")
            seen.add(stratum.divisors)
        if frozenset() not in seen:
            raise InputError("the stratum of the empty index set is required")

    @property
    def ids(self) -> Tuple[str, ...]:
        return tuple(divisor.id for divisor in self.divisors)

    def divisor(self, divisor_id: str) -> Divisor:
        for divisor in self.divisors:
            if divisor.id == divisor_id:
                return divisor
        raise KeyError(divisor_id)

    def stratum(self, divisors: Iterable[str]) -> Optional[StratumClass]:
        key = frozenset(divisors)
        for stratum in self.strata:
            if stratum.divisors == key:
                return stratum
        return None

    def ordered(self, divisors: FrozenSet[str]) -> Tuple[str, ...]:
        return tuple(divisor_id for divisor_id in self.ids if divisor_id in divisors)

    def levels(self) -> Tuple[Level, ...]:
        """Levels on which every stratum has a class."""
        return tuple(level for level in Level if all(stratum.has(level) for stratum in self.strata))


def create_stratified_resolution(
    name: str,
    *,
    dimension: int,
    complete: bool,
    divisors: Iterable[Tuple[str, Fraction, Fraction]],
    strata: Iterable[StratumClass],
    symbols: Optional[Mapping[str, StratumSymbol]] = None,
) -> StratifiedResolution:
    """
    Build a dataset from plain tuples, deriving missing levels.

    Args:
        name: Dataset name
        dimension: Dimension of Y
        complete: Whether Y is complete
        divisors: (id, nu, N) triples
        strata: Stratum classes; levels not given are derived where possible
        symbols: Stratum symbols used by motivic classes

    Returns:
        The StratifiedResolution
    """
    table: Dict[str, StratumSymbol] = dict(symbols or {})
    completed = tuple(complete_levels(stratum, table) for stratum in strata)
    data = StratifiedResolution(
        name=name,
        dimension=dimension,
        complete=complete,
        divisors=tuple(Divisor(id=i, nu=Fraction(nu), N=Fraction(N)) for i, nu, N in divisors),
        strata=completed,
        symbols=table,
    )
    logger.debug("%s: %d divisors, %d strata, levels %s", name, len(data.divisors), len(data.strata), data.levels())
    return data
