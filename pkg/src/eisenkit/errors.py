"""Exception and warning types shared across the toolkit.

Numeric routines refuse to return garbage: anything evaluated inside a pole
exclusion disk raises PoleError, divergent series raise DivergenceError, and
values that would leave double range raise the builtin OverflowError.
"""


class EisenkitError(Exception):
    """Base class for all toolkit errors."""


class PoleError(EisenkitError):
    """Evaluation point lies inside the exclusion disk of a pole."""


class DomainError(EisenkitError):
    """Argument outside the documented domain (e.g. y <= 0)."""


class DivergenceError(EisenkitError):
    """Series or product evaluated where it does not converge."""


class InvalidTypeError(EisenkitError):
    """Not a valid simple Cartan type / rank combination."""


class ResourceError(EisenkitError):
    """Exhaustive enumeration exceeded its configured cap."""


class PlaceDataError(EisenkitError):
    """Malformed Satake place-data input."""

    def __init__(self, message, line_number=None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class ConvergenceWarning(UserWarning):
    """Euler product evaluated with a thin convergence margin."""
