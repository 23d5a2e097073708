"""Exception types shared across the package."""

from __future__ import annotations


class SquareDiffError(ValueError):
    """Base class for all structured errors raised by this package."""


class ValidationError(SquareDiffError):
    """An input fails one of its defining constraints.

    ``constraint`` names the first failing constraint, for CLI reporting.
    """

    def __init__(self, constraint: str, message: str):
        super().__init__(message)
        self.constraint = constraint


class NonPrimitiveError(SquareDiffError):
    """A triple whose entries share a common factor; carries the reduced triple."""

    def __init__(self, reduced: tuple[int, int, int]):
        super().__init__(f"triple is not primitive; reduced form is {reduced}")
        self.reduced = reduced


class DegeneracyError(SquareDiffError):
    """Zero, repeated, or otherwise degenerate values where distinct ones are required."""


class TrivialSolutionError(SquareDiffError):
    """A hyperbolic triple with an entry 0 or +/-1, which solves the relation vacuously."""


class ParameterError(SquareDiffError):
    """A parameter value excluded by the construction (e.g. m in {0, 1, -1})."""


class IrrationalityError(SquareDiffError):
    """An exact rational square root was required but does not exist."""
