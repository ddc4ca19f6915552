"""
Fractions of Laurent polynomials whose denominators are products of
symbol-free factors, the localization in which zeta functions live.

The denominator is kept as a multiset of factors so that sums can use the
least common multiple of their factor sets, and equality tests can cancel
shared factors before cross-multiplying. No polynomial GCD is ever taken.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from ..errors import DenominatorVanishes
from .laurent import ONE, LaurentExpr, Scalar

FactorItem = Union[LaurentExpr, Tuple[LaurentExpr, int]]
Operand = Union["RationalExpr", LaurentExpr, int, Fraction]


def _as_laurent(value: Union[LaurentExpr, int, Fraction]) -> LaurentExpr:
    if isinstance(value, LaurentExpr):
        return value
    return LaurentExpr.constant(value)


def _product(factors: Mapping[LaurentExpr, int]) -> LaurentExpr:
    result = ONE
    for factor, multiplicity in factors.items():
        if multiplicity:
            result = result * factor ** multiplicity
    return result


class RationalExpr:
    """
    ``numerator / prod(factor ** multiplicity)``.

    Equality is value equality (``ratfn_equal``), so instances are unhashable.
    """

    __slots__ = ("_numerator", "_factors")
    __hash__ = None  # type: ignore[assignment]

    def __init__(
        self,
        numerator: Union[LaurentExpr, int, Fraction] = 1,
        factors: Iterable[FactorItem] = (),
    ) -> None:
        num = _as_laurent(numerator)
        counts: Dict[LaurentExpr, int] = {}
        for item in factors:
            factor, multiplicity = item if isinstance(item, tuple) else (item, 1)
            factor = _as_laurent(factor)
            if multiplicity < 0:
                raise ValueError("factor multiplicities must be nonnegative")
            if multiplicity == 0:
                continue
            if not factor:
                raise DenominatorVanishes("a denominator factor is identically zero")
            if factor.has_symbols():
                raise ValueError("denominator factors must be free of stratum symbols")
            if factor.is_monomial():
                num = num * factor.monomial_inverse() ** multiplicity
                continue
            counts[factor] = counts.get(factor, 0) + multiplicity

        if num in counts:
            counts[num] -= 1
            num = ONE
        if not num:
            counts = {}

        self._numerator = num
        self._factors: Tuple[Tuple[LaurentExpr, int], ...] = tuple(
            sorted(
                ((factor, m) for factor, m in counts.items() if m),
                key=lambda item: item[0].sort_key(),
            )
        )

    # Inspection

    @property
    def numerator(self) -> LaurentExpr:
        return self._numerator

    @property
    def factors(self) -> Tuple[Tuple[LaurentExpr, int], ...]:
        return self._factors

    @property
    def denominator(self) -> LaurentExpr:
        return _product(dict(self._factors))

    @property
    def lattice(self) -> int:
        from math import lcm

        result = self._numerator.lattice
        for factor, _ in self._factors:
            result = lcm(result, factor.lattice)
        return result

    def is_zero(self) -> bool:
        return not self._numerator

    def is_laurent(self) -> bool:
        return not self._factors

    def uses(self, variable: str) -> bool:
        return self._numerator.uses(variable) or any(f.uses(variable) for f, _ in self._factors)

    def has_symbols(self) -> bool:
        return self._numerator.has_symbols()

    # Arithmetic

    @staticmethod
    def _coerce(other: object) -> Optional["RationalExpr"]:
        if isinstance(other, RationalExpr):
            return other
        if isinstance(other, (LaurentExpr, int, Fraction)):
            return RationalExpr(other)
        return None

    def __add__(self, other: object) -> "RationalExpr":
        operand = self._coerce(other)
        if operand is None:
            return NotImplemented
        if operand.is_zero():
            return self
        if self.is_zero():
            return operand
        mine, theirs = dict(self._factors), dict(operand._factors)
        merged = dict(mine)
        for factor, multiplicity in theirs.items():
            merged[factor] = max(merged.get(factor, 0), multiplicity)
        left = self._numerator * _product({f: m - mine.get(f, 0) for f, m in merged.items()})
        right = operand._numerator * _product({f: m - theirs.get(f, 0) for f, m in merged.items()})
        return RationalExpr(left + right, merged.items())

    __radd__ = __add__

    def __neg__(self) -> "RationalExpr":
        return RationalExpr(-self._numerator, self._factors)

    def __sub__(self, other: object) -> "RationalExpr":
        operand = self._coerce(other)
        if operand is None:
            return NotImplemented
        return self + (-operand)

    def __rsub__(self, other: object) -> "RationalExpr":
        operand = self._coerce(other)
        if operand is None:
            return NotImplemented
        return operand + (-self)

    def __mul__(self, other: object) -> "RationalExpr":
        operand = self._coerce(other)
        if operand is None:
            return NotImplemented
        if self.is_zero() or operand.is_zero():
            return RationalExpr(0)
        return RationalExpr(self._numerator * operand._numerator, self._factors + operand._factors)

    __rmul__ = __mul__

    def inverse(self) -> "RationalExpr":
        if self.is_zero():
            raise DenominatorVanishes("cannot invert the zero expression")
        if self._numerator.has_symbols():
            raise ValueError("cannot invert an expression carrying stratum symbols")
        return RationalExpr(self.denominator, [self._numerator])

    def __truediv__(self, other: object) -> "RationalExpr":
        operand = self._coerce(other)
        if operand is None:
            return NotImplemented
        return self * operand.inverse()

    def __rtruediv__(self, other: object) -> "RationalExpr":
        operand = self._coerce(other)
        if operand is None:
            return NotImplemented
        return operand * self.inverse()

    def __pow__(self, exponent: int) -> "RationalExpr":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RationalExpr(
            self._numerator ** exponent,
            [(factor, m * exponent) for factor, m in self._factors],
        )

    # Equality

    def __eq__(self, other: object) -> bool:
        operand = self._coerce(other)
        if operand is None:
            return NotImplemented
        return ratfn_equal(self, operand)

    def __ne__(self, other: object) -> bool:
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __repr__(self) -> str:
        from .render import to_text

        return f"RationalExpr({to_text(self)!r})"


def ratfn_equal(first: RationalExpr, second: RationalExpr) -> bool:
    """
    Value equality by cross-multiplication after cancelling shared factors.

    Args:
        first: Left-hand expression
        second: Right-hand expression

    Returns:
        True iff first.num * second.den == second.num * first.den
    """
    mine, theirs = dict(first.factors), dict(second.factors)
    left, right = first.numerator, second.numerator
    for factor in sorted(set(mine) | set(theirs), key=LaurentExpr.sort_key):
        common = min(mine.get(factor, 0), theirs.get(factor, 0))
        if theirs.get(factor, 0) > common:
            left = left * factor ** (theirs[factor] - common)
        if mine.get(factor, 0) > common:
            right = right * factor ** (mine[factor] - common)
    return left == right


# Constructors

def constant(value: Scalar) -> RationalExpr:
    return RationalExpr(value)


def variable(name: str, exponent: Scalar = 1) -> RationalExpr:
    """``L``, ``T``, ``u`` or ``v`` raised to a rational power."""
    return RationalExpr(LaurentExpr.monomial(**{name: exponent}))


def symbol(name: str, degree: int = 1) -> RationalExpr:
    return RationalExpr(LaurentExpr.monomial(symbols={name: degree}))


def base_power(exponent: Scalar, *, base: str = "L", t_exponent: Scalar = 0) -> LaurentExpr:
    """
    ``L^exponent * T^t_exponent`` or, with ``base="uv"``, ``(uv)^exponent * T^t_exponent``.
    """
    if base == "L":
        return LaurentExpr.monomial(L=exponent, T=t_exponent)
    if base == "uv":
        return LaurentExpr.monomial(u=exponent, v=exponent, T=t_exponent)
    raise ValueError(f"unknown base {base!r}")


def zeta_factor(nu: Scalar, N: Scalar, *, base: str = "L") -> RationalExpr:
    """
    The factor (L-1)/(L^(nu+sN)-1), with L^(-s) read as T, so L^(nu+sN) = L^nu * T^(-N).

    Raises:
        DenominatorVanishes: when nu = N = 0
    """
    numerator = base_power(1, base=base) - 1
    denominator = base_power(nu, base=base, t_exponent=-Fraction(N)) - 1
    return RationalExpr(numerator, [denominator])
