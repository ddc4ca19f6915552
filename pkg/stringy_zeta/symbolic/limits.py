"""
Limits at s = 1 through the change of variable q = L^(1-s).

With T = L^(-s) we substitute T = L^(-1) * q, so s -> 1 becomes q -> 1. Writing
q = y^M for the exponent lattice M, numerator and every denominator factor
become polynomials in y whose coefficients are Laurent polynomials in the
remaining variables, and the limit reduces to cancelling powers of (y - 1).
Division by the monic y - 1 never leaves the coefficient ring.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, TypeVar, Union

from .laurent import Key, LaurentExpr
from .rational_expr import RationalExpr

logger = logging.getLogger(__name__)

R = TypeVar("R")

CONSTANT_KEY: Key = (0, 0, 0, 0, ())


@dataclass(frozen=True)
class PoleReport:
    """The expression has a pole of the given order at the evaluation point."""

    order: int

    def __post_init__(self) -> None:
        if self.order <= 0:
            raise ValueError("pole order must be positive")


def order_at_one(coefficients: Dict[int, R], zero: R) -> Tuple[int, R]:
    """
    Multiplicity of the root y = 1 and the value of the cofactor there.

    Args:
        coefficients: Sparse polynomial in y (negative exponents allowed)
        zero: The zero element of the coefficient ring

    Returns:
        (order, value) with P(y) = (y - 1)^order * Q(y) and value = Q(1) != 0
    """
    if not coefficients:
        raise ValueError("the zero polynomial has no finite order at 1")
    low = min(coefficients)
    high = max(coefficients)
    dense: List[R] = [coefficients.get(low + i, zero) for i in range(high - low + 1)]

    order = 0
    while True:
        total = zero
        for coefficient in dense:
            total = total + coefficient
        if total:
            return order, total
        # synthetic division by (y - 1)
        quotient: List[R] = [zero] * (len(dense) - 1)
        carry = zero
        for index in range(len(dense) - 1, 0, -1):
            carry = carry + dense[index]
            quotient[index - 1] = carry
        dense = quotient
        order += 1


def _in_q(expr: LaurentExpr, base: str) -> Dict[int, LaurentExpr]:
    """Rewrite T = base^(-1) * y^M and group by the power of y."""
    lattice = expr.lattice
    grouped: Dict[int, Dict[Key, object]] = {}
    for (l_exp, t_exp, u_exp, v_exp, symbols), coefficient in expr.items():
        if base == "L":
            key = (l_exp - t_exp, 0, u_exp, v_exp, symbols)
        else:
            key = (l_exp, 0, u_exp - t_exp, v_exp - t_exp, symbols)
        bucket = grouped.setdefault(t_exp, {})
        bucket[key] = coefficient
    return {power: LaurentExpr(terms, lattice) for power, terms in grouped.items()}  # type: ignore[arg-type]


def _as_binomial(factor: LaurentExpr) -> Optional[Tuple[Fraction, LaurentExpr]]:
    """(c, X) with factor = c * (X - 1) for a symbol-free monomial X, if factor has that shape."""
    if len(factor) != 2 or factor.has_symbols():
        return None
    terms = dict(factor.items())
    constant = terms.pop(CONSTANT_KEY, None)
    if constant is None:
        return None
    ((key, coefficient),) = terms.items()
    if coefficient != -constant:
        return None
    return coefficient, LaurentExpr({key: 1}, factor.lattice)


def exact_quotient(expr: LaurentExpr, factor: LaurentExpr) -> Optional[LaurentExpr]:
    """
    ``expr / factor`` when factor is c * (X - 1) for a monomial X and divides expr.

    Terms are grouped by their class modulo the exponent of X; each group is a
    Laurent polynomial in X, divided by X - 1 synthetically.

    Returns:
        The quotient, or None when the division is not exact
    """
    binomial = _as_binomial(factor)
    if binomial is None or not expr:
        return None
    scale, monomial = binomial
    lattice = math.lcm(expr.lattice, monomial.lattice)
    ((step_key, _),) = monomial.rescaled(lattice).items()
    step = step_key[:4]
    pivot = next(index for index, value in enumerate(step) if value)

    groups: Dict[Key, Dict[int, Fraction]] = {}
    for key, coefficient in expr.rescaled(lattice).items():
        power = key[pivot] // step[pivot]
        rest = tuple(key[i] - power * step[i] for i in range(4)) + (key[4],)
        groups.setdefault(rest, {})[power] = coefficient  # type: ignore[index]

    quotient: Dict[Key, Fraction] = {}
    for rest, powers in groups.items():
        carry = Fraction(0)
        for power in range(max(powers), min(powers), -1):
            carry += powers.get(power, Fraction(0))
            if carry:
                key = tuple(rest[i] + (power - 1) * step[i] for i in range(4)) + (rest[4],)
                quotient[key] = carry  # type: ignore[index]
        if carry + powers[min(powers)]:
            return None
    return LaurentExpr(quotient, lattice) * (1 / scale)


def _cancel_binomials(
    numerator: LaurentExpr, factors: List[Tuple[LaurentExpr, int]]
) -> Tuple[LaurentExpr, List[Tuple[LaurentExpr, int]]]:
    kept: List[Tuple[LaurentExpr, int]] = []
    for factor, multiplicity in factors:
        while multiplicity:
            quotient = exact_quotient(numerator, factor)
            if quotient is None:
                break
            numerator = quotient
            multiplicity -= 1
        if multiplicity:
            kept.append((factor, multiplicity))
    return numerator, kept


def limit_at_s1(expr: RationalExpr, *, base: str = "L") -> Union[RationalExpr, PoleReport]:
    """
    Limit of a zeta-shaped expression as s -> 1.

    Args:
        expr: Expression in L (or u, v), T and stratum symbols; T stands for
            base^(-s)
        base: "L" at the motivic level, "uv" at the Hodge level

    Returns:
        The limit, or a PoleReport carrying the residual vanishing order of the
        denominator
    """
    if expr.is_zero():
        return RationalExpr(0)

    zero = LaurentExpr()
    numerator_order, numerator_value = order_at_one(_in_q(expr.numerator, base), zero)

    denominator_order = 0
    values: List[Tuple[LaurentExpr, int]] = []
    for factor, multiplicity in expr.factors:
        order, value = order_at_one(_in_q(factor, base), zero)
        denominator_order += order * multiplicity
        values.append((value, multiplicity))

    logger.debug(
        "limit at s=1: numerator order %d, denominator order %d",
        numerator_order,
        denominator_order,
    )
    if denominator_order > numerator_order:
        return PoleReport(denominator_order - numerator_order)
    if numerator_order > denominator_order:
        return RationalExpr(0)
    numerator_value, values = _cancel_binomials(numerator_value, values)
    return RationalExpr(numerator_value, values)


def evaluate_at_s1(expr: RationalExpr, *, base: str = "L") -> RationalExpr:
    """Plain substitution s = 1 (T = base^(-1)); only valid when no denominator factor vanishes."""
    from .substitution import substitute

    inverse = LaurentExpr.monomial(L=-1) if base == "L" else LaurentExpr.monomial(u=-1, v=-1)
    return substitute(expr, {"T": RationalExpr(inverse)})
