"""
Sparse Laurent polynomials with fractional exponents.

The variables are ``L`` (the class of the affine line), ``T`` (standing for
L^(-s), or (uv)^(-s) at Hodge level), ``u`` and ``v``. Their exponents live in
(1/M)Z for a lattice denominator M. Formal stratum symbols such as [C] carry
nonnegative integer degrees.

Values are kept canonical (smallest lattice, no zero coefficients, sorted
symbol degrees), so structural equality is value equality and instances can
be hashed.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

VARIABLES: Tuple[str, ...] = ("L", "T", "u", "v")

SymbolDegrees = Tuple[Tuple[str, int], ...]
Key = Tuple[int, int, int, int, SymbolDegrees]
Scalar = Union[int, Fraction]


def merge_symbols(first: SymbolDegrees, second: SymbolDegrees) -> SymbolDegrees:
    if not first:
        return second
    if not second:
        return first
    degrees = dict(first)
    for name, degree in second:
        degrees[name] = degrees.get(name, 0) + degree
    return tuple(sorted(degrees.items()))


def _canonical_symbols(symbols: Iterable[Tuple[str, int]]) -> SymbolDegrees:
    degrees: Dict[str, int] = {}
    for name, degree in symbols:
        if degree < 0:
            raise ValueError(f"stratum symbol {name} cannot carry a negative degree")
        degrees[name] = degrees.get(name, 0) + int(degree)
    return tuple(sorted((name, degree) for name, degree in degrees.items() if degree))


class LaurentExpr:
    """
    A finitely supported sum of monomials with rational coefficients.

    Args:
        terms: Mapping from keys ``(L, T, u, v, symbols)`` to coefficients, where
            the four exponents are integers read over ``lattice``
        lattice: The exponent-lattice denominator M
    """

    __slots__ = ("_lattice", "_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Key, Scalar]] = None, lattice: int = 1) -> None:
        if lattice <= 0:
            raise ValueError("lattice denominator must be positive")

        collected: Dict[Key, Fraction] = {}
        for (l_exp, t_exp, u_exp, v_exp, symbols), coefficient in (terms or {}).items():
            key = (int(l_exp), int(t_exp), int(u_exp), int(v_exp), _canonical_symbols(symbols))
            collected[key] = collected.get(key, Fraction(0)) + Fraction(coefficient)
        collected = {key: value for key, value in collected.items() if value}

        # Shrink the lattice to the smallest one holding every exponent
        divisor = lattice if collected else 1
        for key in collected:
            for exponent in key[:4]:
                divisor = math.gcd(divisor, exponent)
            if divisor == 1:
                break
        if not collected:
            lattice = 1
        elif divisor > 1:
            collected = {
                (k[0] // divisor, k[1] // divisor, k[2] // divisor, k[3] // divisor, k[4]): c
                for k, c in collected.items()
            }
            lattice //= divisor

        self._lattice = lattice
        self._terms = collected
        self._hash: Optional[int] = None

    # Construction

    @classmethod
    def constant(cls, value: Scalar) -> "LaurentExpr":
        return cls({(0, 0, 0, 0, ()): value})

    @classmethod
    def monomial(
        cls,
        coefficient: Scalar = 1,
        *,
        L: Scalar = 0,
        T: Scalar = 0,
        u: Scalar = 0,
        v: Scalar = 0,
        symbols: Optional[Mapping[str, int]] = None,
    ) -> "LaurentExpr":
        """
        Build ``coefficient * L^L * T^T * u^u * v^v * symbols`` with rational exponents.
        """
        exponents = [Fraction(value) for value in (L, T, u, v)]
        lattice = 1
        for exponent in exponents:
            lattice = math.lcm(lattice, exponent.denominator)
        l_exp, t_exp, u_exp, v_exp = (int(exponent * lattice) for exponent in exponents)
        key = (l_exp, t_exp, u_exp, v_exp, tuple((symbols or {}).items()))
        return cls({key: coefficient}, lattice)

    # Inspection

    @property
    def lattice(self) -> int:
        return self._lattice

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self) -> List[Tuple[Key, Fraction]]:
        """Terms in the deterministic display order (descending on L, T, u, v, then symbols)."""
        return sorted(self._terms.items(), key=lambda item: item[0], reverse=True)

    def exponents(self, key: Key) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (
            Fraction(key[0], self._lattice),
            Fraction(key[1], self._lattice),
            Fraction(key[2], self._lattice),
            Fraction(key[3], self._lattice),
        )

    def rescaled(self, lattice: int) -> Dict[Key, Fraction]:
        """Raw terms re-encoded over a finer lattice (a multiple of the current one)."""
        if lattice % self._lattice:
            raise ValueError(f"lattice {lattice} does not refine {self._lattice}")
        factor = lattice // self._lattice
        if factor == 1:
            return dict(self._terms)
        return {
            (k[0] * factor, k[1] * factor, k[2] * factor, k[3] * factor, k[4]): c
            for k, c in self._terms.items()
        }

    def has_symbols(self) -> bool:
        return any(key[4] for key in self._terms)

    def symbol_names(self) -> Tuple[str, ...]:
        names = {name for key in self._terms for name, _ in key[4]}
        return tuple(sorted(names))

    def uses(self, variable: str) -> bool:
        index = VARIABLES.index(variable)
        return any(key[index] for key in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0, 0, 0, 0, ()) in self._terms)

    def sort_key(self) -> Tuple[int, Tuple[Tuple[Key, Fraction], ...]]:
        return self._lattice, tuple(sorted(self._terms.items()))

    # Arithmetic

    def _coerce(self, other: object) -> Optional["LaurentExpr"]:
        if isinstance(other, LaurentExpr):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentExpr.constant(other)
        return None

    def __add__(self, other: object) -> "LaurentExpr":
        operand = self._coerce(other)
        if operand is None:
            return NotImplemented
        if not operand:
            return self
        if not self:
            return operand
        lattice = math.lcm(self._lattice, operand._lattice)
        terms = self.rescaled(lattice)
        for key, coefficient in operand.rescaled(lattice).items():
            terms[key] = terms.get(key, Fraction(0)) + coefficient
        return LaurentExpr(terms, lattice)

    __radd__ = __add__

    def __neg__(self) -> "LaurentExpr":
        return LaurentExpr({key: -value for key, value in self._terms.items()}, self._lattice)

    def __sub__(self, other: object) -> "LaurentExpr":
        operand = self._coerce(other)
        if operand is None:
            return NotImplemented
        return self + (-operand)

    def __rsub__(self, other: object) -> "LaurentExpr":
        operand = self._coerce(other)
        if operand is None:
            return NotImplemented
        return operand + (-self)

    def __mul__(self, other: object) -> "LaurentExpr":
        operand = self._coerce(other)
        if operand is None:
            return NotImplemented
        if not self or not operand:
            return LaurentExpr()
        lattice = math.lcm(self._lattice, operand._lattice)
        left = self.rescaled(lattice)
        right = operand.rescaled(lattice)
        terms: Dict[Key, Fraction] = {}
        for (l1, t1, u1, v1, s1), c1 in left.items():
            for (l2, t2, u2, v2, s2), c2 in right.items():
                key = (l1 + l2, t1 + t2, u1 + u2, v1 + v2, merge_symbols(s1, s2))
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return LaurentExpr(terms, lattice)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentExpr":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.monomial_inverse() ** (-exponent)
        result = LaurentExpr.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def monomial_inverse(self) -> "LaurentExpr":
        """Inverse of a single symbol-free monomial (the only units of the ring)."""
        if not self.is_monomial():
            raise ValueError("only monomials are invertible in the Laurent ring")
        ((l_exp, t_exp, u_exp, v_exp, symbols), coefficient), = self._terms.items()
        if symbols:
            raise ValueError("stratum symbols are not invertible")
        return LaurentExpr({(-l_exp, -t_exp, -u_exp, -v_exp, ()): 1 / coefficient}, self._lattice)

    def monomial_power(self, exponent: Scalar) -> "LaurentExpr":
        """Rational power of a monomial with coefficient 1 (e.g. (uv)^(1/2))."""
        exponent = Fraction(exponent)
        if exponent.denominator == 1 and (exponent >= 0 or not self.has_symbols()):
            return self ** int(exponent)
        if not self.is_monomial():
            raise ValueError("fractional powers are defined on monomials only")
        ((l_exp, t_exp, u_exp, v_exp, symbols), coefficient), = self._terms.items()
        if coefficient != 1 or symbols:
            raise ValueError("fractional powers need a symbol-free monomial with coefficient 1")
        scale = exponent.numerator
        lattice = self._lattice * exponent.denominator
        return LaurentExpr({(l_exp * scale, t_exp * scale, u_exp * scale, v_exp * scale, ()): 1}, lattice)

    # Equality

    def __eq__(self, other: object) -> bool:
        operand = self._coerce(other)
        if operand is None:
            return NotImplemented
        return self._lattice == operand._lattice and self._terms == operand._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._lattice, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        from .render import laurent_to_text

        return f"LaurentExpr({laurent_to_text(self)!r})"


def laurent_sum(summands: Iterable[LaurentExpr]) -> LaurentExpr:
    """Sum many expressions with a single merge over their common lattice."""
    parts = [part for part in summands if part]
    if not parts:
        return LaurentExpr()
    lattice = 1
    for part in parts:
        lattice = math.lcm(lattice, part.lattice)
    terms: Dict[Key, Fraction] = {}
    for part in parts:
        for key, coefficient in part.rescaled(lattice).items():
            terms[key] = terms.get(key, Fraction(0)) + coefficient
    return LaurentExpr(terms, lattice)


ZERO = LaurentExpr()
ONE = LaurentExpr.constant(1)
