"""
Projective spaces cut by general hyperplanes, and the brute-force check of the
factor identity behind blow-up invariance.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Sequence, Union

from ..stringy.zeta import ClassValue, Level
from ..symbolic import RationalExpr, base_power, ratfn_equal, zeta_factor
from ..symbolic.laurent import LaurentExpr, laurent_sum

logger = logging.getLogger(__name__)


def projective_class(n: int, level: Union[Level, str] = Level.MOTIVIC) -> ClassValue:
    """[P^n] = 1 + L + ... + L^n (uv in place of L at the Hodge level, n + 1 at the Euler level); 0 for n < 0."""
    level = Level(level)
    if level is Level.EULER:
        return Fraction(max(n + 1, 0))
    base = "uv" if level is Level.HODGE else "L"
    return laurent_sum(base_power(i, base=base) for i in range(n + 1))


def hyperplane_stratum_class(
    dimension: int, hyperplanes: int, on: int, level: Union[Level, str] = Level.MOTIVIC
) -> ClassValue:
    """
    Class of the points of P^dimension lying on exactly ``on`` given hyperplanes
    out of ``hyperplanes`` general ones.

    Intersections of j general hyperplanes are copies of P^(dimension - j);
    inclusion-exclusion over the remaining hyperplanes gives the open stratum.
    """
    if not 0 <= on <= hyperplanes:
        raise ValueError("a stratum lies on between 0 and all of the hyperplanes")
    free = hyperplanes - on
    terms = [
        (-1) ** j * comb(free, j) * projective_class(dimension - on - j, level)  # type: ignore[operator]
        for j in range(free + 1)
    ]
    if Level(level) is Level.EULER:
        return sum(terms, Fraction(0))
    return laurent_sum(terms)


@dataclass(frozen=True)
class OracleResult:
    bruteforce: RationalExpr
    closedform: RationalExpr
    equal: bool


def hyperplane_oracle(
    r: int, m: int, k: Sequence[Fraction], dwt: Sequence[Fraction]
) -> OracleResult:
    """
    Sum over strata of P^(r-1) cut by m general hyperplanes, against its closed form.

    Args:
        r: Codimension of the blown-up center, r >= 2
        m: Number of divisors containing the center, 0 <= m <= r
        k: nu-weights k_i of those divisors
        dwt: N-weights d_i of those divisors

    Returns:
        The brute-force sum over K of [stratum on exactly K] * prod over K of
        (L-1)/(L^(k_i + s d_i) - 1), the closed form
        (L-1)^(m-1) (L^(sum(k_i - 1) + r + s sum d_i) - 1) / prod (L^(k_i + s d_i) - 1),
        and whether they agree
    """
    if r < 2 or not 0 <= m <= r:
        raise ValueError("need r >= 2 and 0 <= m <= r")
    if len(k) != m or len(dwt) != m:
        raise ValueError("one k and one d per hyperplane are required")
    k = [Fraction(value) for value in k]
    dwt = [Fraction(value) for value in dwt]

    bruteforce = RationalExpr(0)
    for size in range(m + 1):
        stratum = hyperplane_stratum_class(r - 1, m, size)
        if not stratum:
            continue
        for subset in combinations(range(m), size):
            term = RationalExpr(stratum)
            for i in subset:
                term = term * zeta_factor(k[i], dwt[i])
            bruteforce = bruteforce + term

    lefschetz = LaurentExpr.monomial(L=1) - 1
    weight = sum((value - 1 for value in k), Fraction(0)) + r
    numerator = base_power(weight, t_exponent=-sum(dwt, Fraction(0))) - 1
    factors = [base_power(k[i], t_exponent=-dwt[i]) - 1 for i in range(m)]
    if m == 0:
        closedform = RationalExpr(numerator, [lefschetz])
    else:
        closedform = RationalExpr(numerator * lefschetz ** (m - 1), factors)

    equal = ratfn_equal(bruteforce, closedform)
    logger.debug("hyperplane oracle r=%d m=%d: %s", r, m, "equal" if equal else "different")
    return OracleResult(bruteforce=bruteforce, closedform=closedform, equal=equal)
