"""
Ring homomorphisms on RationalExpr: generic substitution, the Hodge
specialization and the duality substitution.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Mapping, Union

from ..errors import DenominatorVanishes
from .laurent import VARIABLES, LaurentExpr, laurent_sum
from .rational_expr import RationalExpr
from .symbols import SymbolTable

Image = Union[RationalExpr, LaurentExpr]
Assignment = Mapping[str, Image]


def _as_rational(image: Image) -> RationalExpr:
    return image if isinstance(image, RationalExpr) else RationalExpr(image)


def _power(image: RationalExpr, exponent: Fraction) -> RationalExpr:
    if exponent.denominator == 1:
        return image ** int(exponent)
    if image.is_laurent():
        return RationalExpr(image.numerator.monomial_power(exponent))
    raise ValueError("fractional powers can only be substituted by monomials")


def _substitute_laurent(expr: LaurentExpr, images: Dict[str, RationalExpr]) -> RationalExpr:
    polynomial_terms: List[LaurentExpr] = []
    result = RationalExpr(0)
    for key, coefficient in expr.items():
        kept: Dict[str, Fraction] = {}
        term = RationalExpr(coefficient)
        for name, exponent in zip(VARIABLES, expr.exponents(key)):
            if not exponent:
                continue
            if name in images:
                term = term * _power(images[name], exponent)
            else:
                kept[name] = exponent
        kept_symbols: Dict[str, int] = {}
        for name, degree in key[4]:
            if name in images:
                term = term * images[name] ** degree
            else:
                kept_symbols[name] = degree
        if kept or kept_symbols:
            term = term * LaurentExpr.monomial(symbols=kept_symbols, **kept)
        if term.is_laurent():
            polynomial_terms.append(term.numerator)
        else:
            result = result + term
    return result + laurent_sum(polynomial_terms)


def substitute(expr: RationalExpr, assignment: Assignment) -> RationalExpr:
    """
    Apply the ring homomorphism determined by ``assignment``.

    Args:
        expr: The expression to map
        assignment: Images of variables (L, T, u, v) and stratum symbols;
            variables raised to fractional powers must map to monomials

    Returns:
        The image, as a RationalExpr

    Raises:
        DenominatorVanishes: if a denominator factor maps to zero
    """
    images = {name: _as_rational(image) for name, image in assignment.items()}
    result = _substitute_laurent(expr.numerator, images)
    for factor, multiplicity in expr.factors:
        image = _substitute_laurent(factor, images)
        if image.is_zero():
            raise DenominatorVanishes("a denominator factor becomes identically zero")
        result = result * image.inverse() ** multiplicity
    return result


def hodge_assignment(symbols: SymbolTable) -> Dict[str, Image]:
    """L -> uv and every stratum symbol -> its Hodge polynomial; T is kept (it reads (uv)^(-s))."""
    assignment: Dict[str, Image] = {"L": LaurentExpr.monomial(u=1, v=1)}
    for name, declared in symbols.items():
        assignment[name] = declared.hodge
    return assignment


def hodge_specialize(expr: RationalExpr, symbols: SymbolTable) -> RationalExpr:
    return substitute(expr, hodge_assignment(symbols))


def duality_substitution(expr: RationalExpr) -> RationalExpr:
    """u -> 1/u, v -> 1/v, T -> 1/T."""
    return substitute(
        expr,
        {
            "u": LaurentExpr.monomial(u=-1),
            "v": LaurentExpr.monomial(v=-1),
            "T": LaurentExpr.monomial(T=-1),
        },
    )
