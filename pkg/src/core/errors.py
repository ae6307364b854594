"""Exception hierarchy shared by every package."""

from typing import List, Optional


class ComplexError(Exception):
    """Base class for all errors raised by the library."""


class InputError(ComplexError, ValueError):
    """Malformed file, unknown field, bad flag or bad token."""


class ValidationError(ComplexError):
    """A complex or Euclidean fellow failed validation."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class PreconditionError(ComplexError):
    """An operation was called outside its precondition."""


class UnsupportedDimensionError(ComplexError):
    """The operation is not implemented in the dimension of the complex."""


class CapExceededError(ComplexError):
    """Image group of a permutation representation is larger than the cap."""

    def __init__(self, order: int, cap: int):
        super().__init__(f"regularization cap exceeded: image order {order} > cap {cap}")
        self.order = order
        self.cap = cap


class VerificationError(ComplexError):
    """A construction post-condition or certificate check failed."""

    def __init__(self, message: str, reasons: Optional[List[str]] = None):
        super().__init__(message)
        self.reasons = list(reasons or [])
