"""
Compare z(s) at d = 1 with the limit of z_d(s) as d -> 1.

Above the last contraction threshold below 1 the d-minimal model contracts a
fixed set S, and on that model every nu_i and N_i is affine in d. The Euler
zeta z_d(s) is then a rational function of (d, s) whose limit at d = 1 can be
compared with z(s).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

import sympy

from ..mmp import create_partial_model, model_near_one
from ..surface.graph import ResolutionGraph
from ..surface.strata import fiber_strata
from ..symbolic import S, UniRationalFn
from ..symbolic.univariate import to_sympy_rational
from .zeta import zeta

logger = logging.getLogger(__name__)

D = sympy.Symbol("d")


@dataclass(frozen=True)
class DComparison:
    """
    Attributes:
        name: Germ name
        contracted_near_one: Contracted set of the d-minimal model for d close to 1
        contracted_at_one: Contracted set of the log minimal model
        z_d: z_d(s) on the model near d = 1, as a sympy expression in d and s
        limit: lim_{d -> 1} z_d(s), or None when it diverges
        at_one: z(s) at d = 1
        agrees: Whether limit equals at_one
        nu_N_agrees: Whether the limits of (nu_i, N_i) equal the values at d = 1
    """

    name: str
    contracted_near_one: Tuple[str, ...]
    contracted_at_one: Tuple[str, ...]
    z_d: sympy.Expr
    limit: Optional[UniRationalFn]
    at_one: UniRationalFn
    agrees: bool
    nu_N_agrees: bool


def _affine_table(graph: ResolutionGraph, contracted: Tuple[str, ...]) -> Dict[str, Tuple[sympy.Expr, sympy.Expr]]:
    """(nu, N) on the model contracting ``contracted``, as affine functions of d."""
    at_zero = create_partial_model(graph, Fraction(0), contracted).nu_N_pairs()
    at_one = create_partial_model(graph, Fraction(1), contracted).nu_N_pairs()
    table = {}
    for divisor_id, (nu0, N0) in at_zero.items():
        nu1, N1 = at_one[divisor_id]
        table[divisor_id] = (
            to_sympy_rational(nu0) + D * to_sympy_rational(nu1 - nu0),
            to_sympy_rational(N0) + D * to_sympy_rational(N1 - N0),
        )
    return table


def compare_d_to_one(graph: ResolutionGraph) -> DComparison:
    """
    Report whether z(s) = lim_{d -> 1} z_d(s) for the germ.

    Nothing is asserted about the outcome; both models are built and compared.

    Raises:
        StrictlyLcAtDOne: if z(s) itself is undefined
    """
    at_one_zeta = zeta(graph, 1, "euler")
    near_one = model_near_one(graph)
    table = _affine_table(graph, near_one.contracted)

    total = sympy.Integer(0)
    for stratum in fiber_strata(graph):
        if not stratum.euler:
            continue
        term = to_sympy_rational(stratum.euler)
        for divisor in stratum.divisors:
            nu, N = table[divisor]
            term = term / (nu + S * N)
        total += term
    z_d = sympy.cancel(sympy.together(total))

    _, denominator = sympy.fraction(z_d)
    if sympy.expand(denominator.subs(D, 1)) != 0:
        candidate = sympy.cancel(z_d.subs(D, 1))
    else:
        candidate = sympy.limit(z_d, D, 1)
    limit = None if candidate.has(sympy.oo, sympy.zoo, sympy.nan) else UniRationalFn.from_expr(candidate)

    at_one = at_one_zeta.value
    assert isinstance(at_one, UniRationalFn)
    agrees = limit is not None and limit == at_one

    limits = {
        divisor: (nu.subs(D, 1), N.subs(D, 1)) for divisor, (nu, N) in table.items()
    }
    nu_N_agrees = all(
        limits[entry.id] == (to_sympy_rational(entry.nu), to_sympy_rational(entry.N))
        for entry in at_one_zeta.table
    )

    logger.info(
        "%s: lim d->1 of z_d %s z at d=1 (contracted %s vs %s)",
        graph.name,
        "equals" if agrees else "differs from",
        list(near_one.contracted),
        list(at_one_zeta.contracted),
    )
    return DComparison(
        name=graph.name,
        contracted_near_one=near_one.contracted,
        contracted_at_one=at_one_zeta.contracted,
        z_d=z_d,
        limit=limit,
        at_one=at_one,
        agrees=agrees,
        nu_N_agrees=nu_N_agrees,
    )
