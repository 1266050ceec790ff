"""Exceptions of the numeric packages.

Validation problems are Django's `ValidationError`, so that every check
raised by a validator or a constructor reports in one format.
"""
from django.core.exceptions import ValidationError


class ShapeError(ValidationError):
    """Operand dimensions or qubit targets do not fit together."""

    def __init__(self, message, code='shape', params=None):
        super().__init__(message, code=code, params=params)


class CorruptionError(RuntimeError):
    """An identity that holds by construction was found violated."""


class ProbabilityRangeError(CorruptionError):
    """A probability fell outside [0, 1] beyond rounding."""


class UnverifiableError(LookupError):
    """A connection carries no witness to check it against."""
