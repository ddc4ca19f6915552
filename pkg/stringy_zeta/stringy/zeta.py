"""
Stringy zeta functions of surface germs on the motivic, Hodge and Euler levels.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..errors import DefinabilityViolation, InputError
from ..mmp import DivisorData, PartialModel, canonical_model, run_mmp
from ..surface.graph import ResolutionGraph
from ..surface.strata import curve_symbols, fiber_strata
from ..symbolic import (
    PoleReport,
    RationalExpr,
    StratumSymbol,
    UniRationalFn,
    chi_at,
    hodge_specialize,
    zeta_factor,
)
from ..symbolic.laurent import LaurentExpr

logger = logging.getLogger(__name__)

ZetaValue = Union[RationalExpr, UniRationalFn]
ClassValue = Union[LaurentExpr, Fraction]


class Level(str, Enum):
    MOTIVIC = "motivic"
    HODGE = "hodge"
    EULER = "euler"


@dataclass(frozen=True)
class StringyZeta:
    """
    A zeta function with the data it was assembled from.

    Attributes:
        level: Motivic, Hodge or Euler
        value: RationalExpr in L (or u, v) and T = L^(-s), or a rational function of s
        d: Coefficient of the exceptional divisor on the model; None for abstract data
        name: Germ or dataset name
        contracted: Curves contracted on the model
        table: The (nu, N, a) rows the factors were built from
        symbols: Stratum symbols the motivic value may contain
        germ: The resolution graph, for germ zeta functions
    """

    level: Level
    value: ZetaValue
    d: Optional[Fraction]
    name: str
    contracted: Tuple[str, ...] = ()
    table: Tuple[DivisorData, ...] = ()
    symbols: Mapping[str, StratumSymbol] = field(default_factory=dict)
    germ: Optional[ResolutionGraph] = None

    @property
    def base(self) -> str:
        return "uv" if self.level is Level.HODGE else "L"

    def nu_N(self, divisor_id: str) -> Tuple[Fraction, Fraction]:
        for entry in self.table:
            if entry.id == divisor_id:
                return entry.nu, entry.N
        raise KeyError(divisor_id)


def check_definable(table: Iterable[DivisorData]) -> None:
    """
    Raises:
        DefinabilityViolation: if a divisor has nu < 0, or nu = 0 together with N = 0
    """
    for entry in table:
        if entry.nu < 0 or (entry.nu == 0 and entry.N == 0):
            raise DefinabilityViolation(
                f"divisor {entry.id!r} has nu = {entry.nu}, N = {entry.N}; the factor is undefined"
            )


def assemble(
    terms: Iterable[Tuple[ClassValue, Sequence[Tuple[Fraction, Fraction]]]], level: Level
) -> ZetaValue:
    """
    Sum over strata of class * product of the factors of the divisors containing it.

    Args:
        terms: (class at ``level``, [(nu, N) of every divisor of the stratum])
        level: Motivic and Hodge classes are LaurentExpr, Euler classes are rationals

    Returns:
        RationalExpr for motivic/Hodge, UniRationalFn for Euler
    """
    if level is Level.EULER:
        total = UniRationalFn(0)
        for euler, pairs in terms:
            if not euler:
                continue
            term = UniRationalFn(Fraction(euler))
            for nu, N in pairs:
                term = term * UniRationalFn.reciprocal_linear(nu, N)
            total = total + term
        return total

    base = "uv" if level is Level.HODGE else "L"
    result = RationalExpr(0)
    for stratum_class, pairs in terms:
        if not stratum_class:
            continue
        term = RationalExpr(stratum_class)
        for nu, N in pairs:
            term = term * zeta_factor(nu, N, base=base)
        result = result + term
    return result


def zeta_of_model(model: PartialModel, level: Union[Level, str]) -> StringyZeta:
    """
    Assemble the zeta function over the exceptional fiber of a germ on a given model.

    Args:
        model: A d-minimal or d-canonical model (any PartialModel is accepted)
        level: "motivic", "hodge" or "euler"

    Returns:
        The StringyZeta, with the model's (nu, N, a) table as metadata
    """
    level = Level(level)
    graph = model.base
    check_definable(model.divisors)
    pairs = model.nu_N_pairs()

    terms: List[Tuple[ClassValue, List[Tuple[Fraction, Fraction]]]] = []
    for stratum in fiber_strata(graph):
        if level is Level.MOTIVIC:
            stratum_class: ClassValue = stratum.motivic
        elif level is Level.HODGE:
            stratum_class = stratum.hodge
        else:
            stratum_class = stratum.euler
        terms.append((stratum_class, [pairs[divisor] for divisor in stratum.divisors]))

    value = assemble(terms, level)
    logger.info("assembled %s zeta of %s at d=%s", level.value, graph.name, model.d)
    return StringyZeta(
        level=level,
        value=value,
        d=model.d,
        name=graph.name,
        contracted=model.contracted,
        table=model.divisors,
        symbols=curve_symbols(graph),
        germ=graph,
    )


def zeta(
    graph: ResolutionGraph,
    d: Fraction,
    level: Union[Level, str] = Level.MOTIVIC,
    *,
    model: str = "minimal",
) -> StringyZeta:
    """
    The stringy zeta function of a germ, built on its d-minimal (or d-canonical) model.

    Args:
        graph: The resolution graph (any log resolution; the result does not depend on it)
        d: Coefficient of the exceptional divisor, 0 <= d <= 1
        level: "motivic", "hodge" or "euler"
        model: "minimal" or "canonical"

    Returns:
        The StringyZeta

    Raises:
        InputError: if ``model`` is neither "minimal" nor "canonical"
        StrictlyLcAtDOne: if d = 1 and the germ has a strictly lc point
    """
    d = Fraction(d)
    if model == "minimal":
        partial = run_mmp(graph, d)
    elif model == "canonical":
        partial = canonical_model(graph, d)
    else:
        raise InputError(f"unknown model {model!r}; expected 'minimal' or 'canonical'")
    return zeta_of_model(partial, level)


def hodge_image(z: StringyZeta) -> RationalExpr:
    """Hodge specialization of a motivic zeta (L -> uv, curve symbols -> Hodge polynomials)."""
    if z.level is not Level.MOTIVIC or not isinstance(z.value, RationalExpr):
        raise ValueError("only motivic zeta functions can be specialized")
    return hodge_specialize(z.value, z.symbols)


def euler_at(z: StringyZeta, s: Fraction) -> Union[Fraction, PoleReport]:
    """chi of a motivic or Hodge zeta at a rational point s, or the Euler zeta evaluated there."""
    if isinstance(z.value, UniRationalFn):
        return z.value.limit(s)
    return chi_at(z.value, s, z.symbols)
