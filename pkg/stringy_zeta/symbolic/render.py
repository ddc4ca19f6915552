"""
Plain-text, LaTeX and JSON renderings of Laurent expressions, rational
expressions and univariate functions.

Monomials are ordered lexicographically on the (L, T, u, v) exponents and then
on symbol degrees, highest first, so identical values always print identically.
"""
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from .laurent import VARIABLES, Key, LaurentExpr
from .rational_expr import RationalExpr
from .univariate import UniRationalFn


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# Plain text

def _text_power(base: str, exponent: Fraction) -> str:
    if exponent == 1:
        return base
    if exponent.denominator == 1 and exponent > 0:
        return f"{base}^{exponent.numerator}"
    return f"{base}^({format_rational(exponent)})"


def _text_monomial(expr: LaurentExpr, key: Key) -> List[str]:
    parts = [_text_power(name, exponent) for name, exponent in zip(VARIABLES, expr.exponents(key)) if exponent]
    parts.extend(_text_power(f"[{name}]", Fraction(degree)) for name, degree in key[4])
    return parts


def _join_terms(rendered: List[Tuple[Fraction, List[str]]], times: str, render_coefficient) -> str:
    if not rendered:
        return "0"
    pieces: List[str] = []
    for index, (coefficient, factors) in enumerate(rendered):
        negative = coefficient < 0
        magnitude = -coefficient if negative else coefficient
        if factors and magnitude == 1:
            body = times.join(factors)
        elif factors:
            body = render_coefficient(magnitude) + times + times.join(factors)
        else:
            body = render_coefficient(magnitude)
        if index == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)


def laurent_to_text(expr: LaurentExpr) -> str:
    rendered = [(coefficient, _text_monomial(expr, key)) for key, coefficient in expr.items()]
    return _join_terms(rendered, "*", format_rational)


def _wrap(text: str, count: int) -> str:
    return f"({text})" if count > 1 or text.startswith("-") else text


def to_text(expr: RationalExpr) -> str:
    numerator = _wrap(laurent_to_text(expr.numerator), len(expr.numerator))
    if expr.is_laurent():
        return laurent_to_text(expr.numerator)
    parts = []
    for factor, multiplicity in expr.factors:
        body = f"({laurent_to_text(factor)})"
        parts.append(body if multiplicity == 1 else f"{body}^{multiplicity}")
    denominator = parts[0] if len(parts) == 1 else "(" + "*".join(parts) + ")"
    return f"{numerator}/{denominator}"


def _poly_terms(coefficients: List[Fraction]) -> List[Tuple[Fraction, List[str]]]:
    degree = len(coefficients) - 1
    rendered = []
    for index, coefficient in enumerate(coefficients):
        if coefficient:
            power = degree - index
            factors = [] if power == 0 else ["s" if power == 1 else f"s^{power}"]
            rendered.append((coefficient, factors))
    return rendered


def uni_to_text(fn: UniRationalFn) -> str:
    numerator_terms = _poly_terms(fn.numerator_coefficients())
    numerator = _join_terms(numerator_terms, "*", format_rational)
    if fn.denominator.degree() == 0:
        return numerator
    denominator_terms = _poly_terms(fn.denominator_coefficients())
    denominator = _join_terms(denominator_terms, "*", format_rational)
    return f"{_wrap(numerator, len(numerator_terms))}/{_wrap(denominator, len(denominator_terms))}"


# LaTeX

def _latex_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    return f"{sign}\\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"


def _latex_power(base: str, exponent: Fraction) -> str:
    if exponent == 1:
        return base
    return f"{base}^{{{_latex_rational(exponent)}}}"


def laurent_to_latex(expr: LaurentExpr) -> str:
    rendered = []
    for key, coefficient in expr.items():
        factors = [_latex_power(name, e) for name, e in zip(VARIABLES, expr.exponents(key)) if e]
        factors.extend(_latex_power(f"[{name}]", Fraction(degree)) for name, degree in key[4])
        rendered.append((coefficient, factors))
    return _join_terms(rendered, " ", _latex_rational)


def to_latex(expr: RationalExpr) -> str:
    if expr.is_laurent():
        return laurent_to_latex(expr.numerator)
    parts = []
    for factor, multiplicity in expr.factors:
        body = f"\\left({laurent_to_latex(factor)}\\right)"
        parts.append(body if multiplicity == 1 else f"{body}^{{{multiplicity}}}")
    return f"\\frac{{{laurent_to_latex(expr.numerator)}}}{{{' '.join(parts)}}}"


def uni_to_latex(fn: UniRationalFn) -> str:
    numerator = _join_terms(_poly_terms(fn.numerator_coefficients()), " ", _latex_rational)
    if fn.denominator.degree() == 0:
        return numerator
    denominator = _join_terms(_poly_terms(fn.denominator_coefficients()), " ", _latex_rational)
    return f"\\frac{{{numerator}}}{{{denominator}}}"


# JSON

def laurent_to_json(expr: LaurentExpr) -> List[Dict[str, Any]]:
    terms = []
    for key, coefficient in expr.items():
        entry: Dict[str, Any] = {"coefficient": format_rational(coefficient)}
        for name, exponent in zip(VARIABLES, expr.exponents(key)):
            entry[name] = format_rational(exponent)
        entry["symbols"] = {name: degree for name, degree in key[4]}
        terms.append(entry)
    return terms


def to_json(expr: RationalExpr) -> Dict[str, Any]:
    return {
        "numerator": laurent_to_json(expr.numerator),
        "denominator": [
            {"factor": laurent_to_json(factor), "multiplicity": multiplicity}
            for factor, multiplicity in expr.factors
        ],
    }


def uni_to_json(fn: UniRationalFn) -> Dict[str, Any]:
    return {
        "variable": "s",
        "numerator": [format_rational(c) for c in fn.numerator_coefficients()],
        "denominator": [format_rational(c) for c in fn.denominator_coefficients()],
    }


__all__ = [
    "format_rational",
    "laurent_to_text",
    "to_text",
    "uni_to_text",
    "laurent_to_latex",
    "to_latex",
    "uni_to_latex",
    "laurent_to_json",
    "to_json",
    "uni_to_json",
]
