"""
The functional equation of the Hodge zeta function of a complete resolution.
"""
import logging
from dataclasses import dataclass
from typing import Optional

from ..errors import MissingLevel, NotApplicable
from ..stringy.zeta import Level
from ..symbolic import RationalExpr, base_power, duality_substitution
from .stratified import StratifiedResolution
from .zeta import closed_strata_form, zeta_abstract

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DualityReport:
    """
    Attributes:
        passed: (uv)^dim * Z(1/u, 1/v, 1/T) equals Z
        residual: The difference when it does not
        closed_form_agrees: The closed-strata form equals the open-strata form
        value: The Hodge zeta function Z
    """

    name: str
    passed: bool
    residual: Optional[RationalExpr]
    closed_form_agrees: bool
    value: RationalExpr


def duality_check(data: StratifiedResolution) -> DualityReport:
    """
    Check the functional equation of the Hodge zeta function.

    Args:
        data: A complete stratified resolution with Hodge classes

    Returns:
        The report; a failed identity carries the nonzero residual

    Raises:
        NotApplicable: if the data is not complete
        MissingLevel: if a stratum has no Hodge class
    """
    if not data.complete:
        raise NotApplicable(f"{data.name!r} is not complete; the functional equation needs a complete Y")
    if Level.HODGE not in data.levels():
        raise MissingLevel(f"{data.name!r} has strata without a Hodge class")

    z = zeta_abstract(data, Level.HODGE).value
    assert isinstance(z, RationalExpr)
    dual = duality_substitution(z) * base_power(data.dimension, base="uv")
    passed = dual == z
    residual = None if passed else dual - z

    closed = closed_strata_form(data, Level.HODGE)
    closed_form_agrees = closed == z

    logger.info(
        "duality on %s: %s; closed-strata form %s",
        data.name,
        "holds" if passed else "fails",
        "agrees" if closed_form_agrees else "differs",
    )
    return DualityReport(
        name=data.name,
        passed=passed,
        residual=residual,
        closed_form_agrees=closed_form_agrees,
        value=z,
    )
