"""
Euler (chi) specialization of ring elements.

Stratum symbols go to their Euler numbers, u and v to L^(1/2), and T to
L^(-s) for a fixed rational s; the value is then the limit L -> 1, computed by
cancelling powers of (w - 1) with w = L^(1/M). This is the map sending
(L-1)/(L^q-1) to 1/q.
"""
import math
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .laurent import LaurentExpr
from .limits import PoleReport, order_at_one
from .rational_expr import RationalExpr
from .symbols import SymbolTable


def _exponents_in_w(
    expr: LaurentExpr, s: Fraction, symbols: SymbolTable
) -> Dict[Fraction, Fraction]:
    collected: Dict[Fraction, Fraction] = {}
    for key, coefficient in expr.items():
        l_exp, t_exp, u_exp, v_exp = expr.exponents(key)
        exponent = l_exp + (u_exp + v_exp) / 2 - s * t_exp
        value = coefficient
        for name, degree in key[4]:
            value *= symbols[name].euler ** degree
        collected[exponent] = collected.get(exponent, Fraction(0)) + value
    return {exponent: value for exponent, value in collected.items() if value}


def _order(collected: Dict[Fraction, Fraction], lattice: int) -> Tuple[int, Fraction]:
    integral = {int(exponent * lattice): value for exponent, value in collected.items()}
    return order_at_one(integral, Fraction(0))


def chi_at(
    expr: RationalExpr, s: Union[int, Fraction], symbols: SymbolTable
) -> Union[Fraction, PoleReport]:
    """
    Euler specialization of ``expr`` at the rational point ``s``.

    Args:
        expr: Motivic or Hodge level expression
        s: Value of the zeta variable
        symbols: Euler numbers for every stratum symbol occurring in ``expr``

    Returns:
        The exact value, or a PoleReport when the specialization has a pole
    """
    s = Fraction(s)
    numerator = _exponents_in_w(expr.numerator, s, symbols)
    if not numerator:
        return Fraction(0)
    factors: List[Tuple[Dict[Fraction, Fraction], int]] = [
        (_exponents_in_w(factor, s, symbols), multiplicity) for factor, multiplicity in expr.factors
    ]

    lattice = 1
    for exponent in numerator:
        lattice = math.lcm(lattice, exponent.denominator)
    for collected, _ in factors:
        if not collected:
            return PoleReport(1)
        for exponent in collected:
            lattice = math.lcm(lattice, exponent.denominator)

    numerator_order, value = _order(numerator, lattice)
    denominator_order = 0
    for collected, multiplicity in factors:
        order, factor_value = _order(collected, lattice)
        denominator_order += order * multiplicity
        value /= factor_value ** multiplicity

    if denominator_order > numerator_order:
        return PoleReport(denominator_order - numerator_order)
    if numerator_order > denominator_order:
        return Fraction(0)
    return value


def euler_value(
    expr: RationalExpr, symbols: SymbolTable, s: Optional[Union[int, Fraction]] = None
) -> Union[Fraction, PoleReport]:
    """chi of an element without T, or of any element at a fixed s."""
    if s is None:
        if expr.uses("T"):
            raise ValueError("expression depends on T; pass a value for s")
        s = 0
    return chi_at(expr, s, symbols)
