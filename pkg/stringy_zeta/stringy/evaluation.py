"""
Evaluation of zeta functions at s = 1.
"""
import logging
from fractions import Fraction
from typing import Union

from ..errors import ModelViolation
from ..symbolic import PoleReport, RationalExpr, UniRationalFn, evaluate_at_s1, limit_at_s1
from .invariants import batyrev_expression
from .zeta import StringyZeta

logger = logging.getLogger(__name__)

S1Value = Union[RationalExpr, Fraction, PoleReport]


def eval_or_limit_at_1(z: StringyZeta, *, check: bool = True) -> S1Value:
    """
    The value of z at s = 1, as a limit.

    Args:
        z: A zeta function on any level
        check: For germs whose log discrepancies are all nonzero, compare the
            value with the Batyrev expression on the same level

    Returns:
        A RationalExpr (motivic, Hodge), a rational (Euler), or a PoleReport

    Raises:
        ModelViolation: if the comparison with the Batyrev expression fails
    """
    if isinstance(z.value, UniRationalFn):
        value: S1Value = z.value.limit(1)
    else:
        value = limit_at_s1(z.value, base=z.base)

    if isinstance(value, PoleReport):
        logger.info("%s zeta of %s has a pole of order %d at s=1", z.level.value, z.name, value.order)
        return value

    if check and z.germ is not None and all(entry.a != 0 for entry in z.table):
        expected = batyrev_expression(z.germ, z.level)
        if expected != value:
            raise ModelViolation(
                f"value at s=1 of the {z.level.value} zeta of {z.name!r} differs from the Batyrev expression"
            )
        logger.debug("value at s=1 of %s agrees with the Batyrev expression", z.name)
    return value


def is_constant_in_s(z: StringyZeta) -> bool:
    """True when z does not depend on s (every N vanishes after cancellation)."""
    if isinstance(z.value, UniRationalFn):
        return z.value.is_constant()
    return not z.value.uses("T") or evaluate_at_s1(z.value, base=z.base) == z.value
