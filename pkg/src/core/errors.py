"""
Exception hierarchy for the p-closedness toolkit.

Every domain failure derives from :class:`PClosedError` so callers (the CLI
in particular) can separate algebraic errors from programming errors.
"""

from __future__ import annotations


class PClosedError(ValueError):
    """Base class for all domain errors."""


class NotPrimeError(PClosedError):
    pass


class ArityMismatch(PClosedError):
    pass


class CharacteristicMismatch(PClosedError):
    pass


class ZeroDenominator(PClosedError, ZeroDivisionError):
    pass


class NotAPthPower(PClosedError):
    pass


class RaggedMatrix(PClosedError):
    pass


class DivergenceNotZero(PClosedError):
    pass


class NotCoprime(PClosedError):
    pass


class ZeroInput(PClosedError):
    pass


class NotClosed(PClosedError):
    pass


class MalformedSeriesSpec(PClosedError):
    pass


class UnknownVariable(PClosedError):
    pass


class ExprSyntaxError(PClosedError):
    """Raised by the expression parser; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class InvariantViolation(PClosedError):
    """
    An internal postcondition failed.

    These are never expected on valid input; seeing one means a bug.
    """


class VariableIndexError(PClosedError, IndexError):
    pass


class NotDivisible(PClosedError):
    pass
