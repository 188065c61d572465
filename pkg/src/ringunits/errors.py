"""Exception types shared across the package."""


class RingUnitsError(Exception):
    """Base class for all package errors."""


class InvalidInputError(RingUnitsError, ValueError):
    """A domain precondition was violated (a = 0, n < 1, zero polynomial, ...)."""


class SizeLimitError(RingUnitsError):
    """An input exceeded a configured budget (factoring ceiling, degree cap)."""


class DegreeLimitError(SizeLimitError):
    """Expanding an expression would exceed the configured degree budget."""


class ShapeNotCyclotomicError(RingUnitsError, ValueError):
    """The operation needs a pure cyclotomic shape (content 1, remainder 1)."""


class ParseError(RingUnitsError, ValueError):
    """Polynomial expression syntax error, with position information."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
