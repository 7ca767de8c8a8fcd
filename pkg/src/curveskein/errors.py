"""Exception types shared across the package."""


class CurveSkeinError(Exception):
    """Base class for all package errors."""


class InputError(CurveSkeinError):
    """Malformed or unsupported input data."""


class IntegralityError(CurveSkeinError):
    """A fractional framing exponent failed to be an integer."""


class TruncationError(CurveSkeinError):
    """A truncated series was too short for the requested operation."""


class ConsistencyError(CurveSkeinError):
    """An internal structural guarantee failed to hold on computed data."""
