"""Exception and warning types shared across the package."""


class FrickeError(Exception):
    """Base class for errors raised by this package."""


class WordSyntaxError(FrickeError, ValueError):
    """Raised when a word string does not match the word grammar."""


class DomainError(FrickeError, ValueError):
    """Raised when an input lies outside the domain of an operation."""


class RangeError(FrickeError, OverflowError):
    """Raised when a direct evaluation would overflow double precision."""


class InconsistencyError(FrickeError, ValueError):
    """Raised when geometric data fails a consistency check beyond roundoff."""


class ConditioningWarning(UserWarning):
    """Accumulated roundoff has pushed a determinant away from 1."""
