from .laurent import LaurentExpr, laurent_sum
from .limits import PoleReport, evaluate_at_s1, limit_at_s1
from .rational_expr import RationalExpr, base_power, constant, ratfn_equal, symbol, variable, zeta_factor
from .specialize import chi_at, euler_value
from .substitution import duality_substitution, hodge_specialize, substitute
from .symbols import StratumSymbol, SymbolTable
from .univariate import S, UniRationalFn

__all__ = [
    "LaurentExpr",
    "laurent_sum",
    "PoleReport",
    "evaluate_at_s1",
    "limit_at_s1",
    "RationalExpr",
    "base_power",
    "constant",
    "ratfn_equal",
    "symbol",
    "variable",
    "zeta_factor",
    "chi_at",
    "euler_value",
    "duality_substitution",
    "hodge_specialize",
    "substitute",
    "StratumSymbol",
    "SymbolTable",
    "S",
    "UniRationalFn",
]
