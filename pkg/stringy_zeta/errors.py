"""
Exception hierarchy for the stringy zeta toolkit.

Every domain error carries ``error_name``, the name the CLI prints in
``error: <ErrorName>: <message>``.
"""


class StringyError(Exception):
    """Base class for every error raised by this package."""

    error_name = "StringyError"

    def __init__(self, message: str = "") -> None:
        super().__init__(message)
        self.message = message

    def __str__(self) -> str:
        return self.message or self.error_name


class InputError(StringyError):
    """Malformed input documents, schema violations and bad rational strings."""

    error_name = "InputError"


class ConfigError(StringyError):
    error_name = "ConfigError"


# symbolic

class DenominatorVanishes(StringyError):
    """A denominator factor became identically zero."""

    error_name = "DenominatorVanishes"


# surface

class InvalidGraph(StringyError):
    """Connectivity, loops, duplicate ids or branch coefficients out of range."""

    error_name = "InvalidGraph"


class NotAGerm(StringyError):
    """The intersection matrix is not negative definite."""

    error_name = "NotAGerm"


class SiteNotFound(StringyError):
    error_name = "SiteNotFound"


class StructureViolation(StringyError):
    error_name = "StructureViolation"


class NotApplicable(StringyError):
    error_name = "NotApplicable"


# mmp

class AlreadyContracted(StringyError):
    error_name = "AlreadyContracted"


class StrictlyLcAtDOne(StringyError):
    """d = 1 was requested on a germ whose model carries a strictly lc point."""

    error_name = "StrictlyLcAtDOne"


class ModelViolation(StringyError):
    """An inequality the model must satisfy failed; indicates non-realizable data."""

    error_name = "ModelViolation"


# stringy

class ZeroDiscrepancy(StringyError):
    error_name = "ZeroDiscrepancy"


# abstract

class DefinabilityViolation(StringyError):
    """Some divisor has nu = 0 and N = 0 (or nu < 0)."""

    error_name = "DefinabilityViolation"


class MissingLevel(StringyError):
    error_name = "MissingLevel"


class InconsistentLevels(StringyError):
    """Classes declared at several levels disagree after specialization."""

    error_name = "InconsistentLevels"


class InconsistentCenter(StringyError):
    error_name = "InconsistentCenter"
