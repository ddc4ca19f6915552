from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .laurent import LaurentExpr

SymbolTable = Mapping[str, "StratumSymbol"]


@dataclass(frozen=True)
class StratumSymbol:
    """
    A formal class in the coefficient ring together with its specializations.

    Curve symbols are declared through ``curve`` and get the Hodge image
    uv - g*u - g*v + 1 and Euler image 2 - 2g. Abstract inputs may declare a
    symbol with explicit images instead.
    """

    name: str
    hodge: LaurentExpr
    euler: Fraction
    genus: Optional[int] = None

    @classmethod
    def curve(cls, name: str, genus: int) -> "StratumSymbol":
        if genus < 0:
            raise ValueError("genus must be nonnegative")
        hodge = (
            LaurentExpr.monomial(u=1, v=1)
            - LaurentExpr.monomial(genus, u=1)
            - LaurentExpr.monomial(genus, v=1)
            + 1
        )
        return cls(name=name, hodge=hodge, euler=Fraction(2 - 2 * genus), genus=genus)

    def __post_init__(self) -> None:
        if self.hodge.uses("L") or self.hodge.uses("T") or self.hodge.has_symbols():
            raise ValueError(f"Hodge image of [{self.name}] must be a polynomial in u and v")
