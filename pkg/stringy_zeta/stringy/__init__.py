from .comparison import DComparison, compare_d_to_one
from .evaluation import eval_or_limit_at_1, is_constant_in_s
from .invariants import SurfaceInvariants, batyrev_expression, stringy_invariants
from .zeta import Level, StringyZeta, assemble, euler_at, hodge_image, zeta, zeta_of_model

__all__ = [
    "DComparison",
    "compare_d_to_one",
    "eval_or_limit_at_1",
    "is_constant_in_s",
    "SurfaceInvariants",
    "batyrev_expression",
    "stringy_invariants",
    "Level",
    "StringyZeta",
    "assemble",
    "euler_at",
    "hodge_image",
    "zeta",
    "zeta_of_model",
]
