"""
Exact rationals on the wire: decimal-free "p/q" or integer strings.
"""
import re
from fractions import Fraction
from typing import Union

from ..errors import InputError
from ..symbolic.render import format_rational

RATIONAL_PATTERN = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(value: Union[str, int], *, field: str = "value") -> Fraction:
    """
    Parse a "p/q" or integer string.

    JSON integers are accepted as well; floats never are.

    Raises:
        InputError: if ``value`` is not an exact rational literal
    """
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise InputError(f"{field}: expected a \"p/q\" string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    text = value.strip()
    if not RATIONAL_PATTERN.match(text):
        raise InputError(f"{field}: {value!r} is not a \"p/q\" rational")
    numerator, _, denominator = text.partition("/")
    if denominator and int(denominator) == 0:
        raise InputError(f"{field}: {value!r} has a zero denominator")
    return Fraction(int(numerator), int(denominator or 1))


def parse_d(value: Union[str, int]) -> Fraction:
    """A boundary weight d with 0 <= d <= 1."""
    d = parse_rational(value, field="d")
    if not 0 <= d <= 1:
        raise InputError(f"d must lie in [0, 1], got {format_rational(d)}")
    return d


__all__ = ["RATIONAL_PATTERN", "format_rational", "parse_d", "parse_rational"]
