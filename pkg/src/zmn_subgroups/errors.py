"""Exception hierarchy.

Input-side problems (``DomainError``) are distinguished from failures that
happen while computing (caps, overflow, precision), so the CLI can map them
to different exit codes.
"""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class ComputationError(ArithmeticError):
    """Base class for errors raised while a valid request is being computed."""


class SizeError(ComputationError):
    """A request exceeds a configured size or memory cap."""


class CountOverflowError(ComputationError):
    """An integer count left the signed 64-bit range."""


class PrecisionError(ComputationError):
    """Requested precision cannot be met, or two methods disagree."""


class UnsupportedOrderError(ComputationError):
    """A series truncation order beyond what the constants support."""


class SingularityError(ComputationError):
    """Inverting a series whose leading coefficient is zero."""


class InsufficientDataError(ComputationError):
    """Too few usable records for a fit."""
