"""
Rational functions of one variable s over Q, used for Euler-level zeta functions.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Union

import sympy

from ..errors import DenominatorVanishes
from .limits import PoleReport

S = sympy.Symbol("s")

PolyLike = Union[sympy.Poly, sympy.Expr, int, Fraction]


def to_fraction(value: object) -> Fraction:
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def to_sympy_rational(value: Union[int, Fraction]) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def _poly(value: PolyLike) -> sympy.Poly:
    if isinstance(value, sympy.Poly):
        return value.set_domain(sympy.QQ)
    if isinstance(value, (int, Fraction)):
        value = to_sympy_rational(value)
    return sympy.Poly(value, S, domain=sympy.QQ)


class UniRationalFn:
    """
    ``numerator(s) / denominator(s)`` in lowest terms with a monic denominator.

    The stored form is canonical, so equality is coefficient equality.
    """

    __slots__ = ("_numerator", "_denominator")

    def __init__(self, numerator: PolyLike = 0, denominator: PolyLike = 1) -> None:
        num = _poly(numerator)
        den = _poly(denominator)
        if den.is_zero:
            raise DenominatorVanishes("denominator of a univariate function is zero")
        common = num.gcd(den)
        if not common.is_zero and common.degree() > 0:
            num = num.exquo(common)
            den = den.exquo(common)
        leading = den.LC()
        self._numerator = num.quo_ground(leading)
        self._denominator = den.monic()
        if self._numerator.is_zero:
            self._denominator = _poly(1)

    @classmethod
    def reciprocal_linear(cls, nu: Union[int, Fraction], N: Union[int, Fraction]) -> "UniRationalFn":
        """1/(nu + N*s), the Euler image of (L-1)/(L^(nu+sN)-1)."""
        return cls(1, to_sympy_rational(nu) + to_sympy_rational(N) * S)

    @classmethod
    def from_expr(cls, expression: sympy.Expr) -> "UniRationalFn":
        numerator, denominator = sympy.fraction(sympy.cancel(sympy.together(expression)))
        return cls(numerator, denominator)

    @property
    def numerator(self) -> sympy.Poly:
        return self._numerator

    @property
    def denominator(self) -> sympy.Poly:
        return self._denominator

    def numerator_coefficients(self) -> List[Fraction]:
        return [to_fraction(c) for c in self._numerator.all_coeffs()]

    def denominator_coefficients(self) -> List[Fraction]:
        return [to_fraction(c) for c in self._denominator.all_coeffs()]

    def is_zero(self) -> bool:
        return bool(self._numerator.is_zero)

    def is_constant(self) -> bool:
        return self._numerator.degree() <= 0 and self._denominator.degree() == 0

    def as_expr(self) -> sympy.Expr:
        return self._numerator.as_expr() / self._denominator.as_expr()

    # Arithmetic

    @staticmethod
    def _coerce(other: object) -> "UniRationalFn | None":
        if isinstance(other, UniRationalFn):
            return other
        if isinstance(other, (int, Fraction)):
            return UniRationalFn(other)
        return None

    def __add__(self, other: object) -> "UniRationalFn":
        operand = self._coerce(other)
        if operand is None:
            return NotImplemented
        return UniRationalFn(
            self._numerator * operand._denominator + operand._numerator * self._denominator,
            self._denominator * operand._denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> "UniRationalFn":
        return UniRationalFn(-self._numerator, self._denominator)

    def __sub__(self, other: object) -> "UniRationalFn":
        operand = self._coerce(other)
        if operand is None:
            return NotImplemented
        return self + (-operand)

    def __rsub__(self, other: object) -> "UniRationalFn":
        operand = self._coerce(other)
        if operand is None:
            return NotImplemented
        return operand + (-self)

    def __mul__(self, other: object) -> "UniRationalFn":
        operand = self._coerce(other)
        if operand is None:
            return NotImplemented
        return UniRationalFn(
            self._numerator * operand._numerator,
            self._denominator * operand._denominator,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "UniRationalFn":
        operand = self._coerce(other)
        if operand is None:
            return NotImplemented
        if operand.is_zero():
            raise DenominatorVanishes("division by the zero function")
        return UniRationalFn(
            self._numerator * operand._denominator,
            self._denominator * operand._numerator,
        )

    def __eq__(self, other: object) -> bool:
        operand = self._coerce(other)
        if operand is None:
            return NotImplemented
        return self._numerator == operand._numerator and self._denominator == operand._denominator

    def __hash__(self) -> int:
        return hash((tuple(self.numerator_coefficients()), tuple(self.denominator_coefficients())))

    # Evaluation

    def evaluate(self, point: Union[int, Fraction]) -> Fraction:
        value = to_sympy_rational(point)
        denominator = self._denominator.eval(value)
        if denominator == 0:
            raise DenominatorVanishes(f"denominator vanishes at s = {point}")
        return to_fraction(self._numerator.eval(value) / denominator)

    def limit(self, point: Union[int, Fraction] = 1) -> Union[Fraction, PoleReport]:
        """
        Value at ``point``, or the pole order there.

        The stored form is reduced, so a root of the denominator is never a
        root of the numerator.
        """
        root = _poly(S - to_sympy_rational(point))
        denominator = self._denominator
        order = 0
        while denominator.degree() > 0:
            quotient, remainder = denominator.div(root)
            if not remainder.is_zero:
                break
            denominator = quotient
            order += 1
        if order:
            return PoleReport(order)
        return self.evaluate(point)

    def __repr__(self) -> str:
        from .render import uni_to_text

        return f"UniRationalFn({uni_to_text(self)!r})"
