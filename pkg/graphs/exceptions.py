"""Custom exceptions for the cartwidth toolkit."""


class CartwidthError(Exception):
    """Base class for every error raised by the toolkit."""


class InvalidInputError(CartwidthError, ValueError):
    """Raised when a graph, parameter or factor is unusable."""


class VertexIndexError(CartwidthError, IndexError):
    """Raised when a vertex or copy id is out of range."""


class StructuralError(CartwidthError):
    """Raised when an object is malformed, as opposed to merely invalid."""


class DecompositionValidationError(CartwidthError):
    """Raised when an operation requires a valid tree decomposition."""


class ResourceLimitError(CartwidthError):
    """Raised when an exact solver exceeds its ceiling or budget."""


class ElementSpecError(CartwidthError):
    """Raised when a product bramble element recipe breaks its budgets."""


class PreconditionError(CartwidthError):
    """Raised when a factor is too small or not k-connected."""


class ParseError(CartwidthError):
    """Raised when an input file cannot be parsed."""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class InvariantViolation(CartwidthError, AssertionError):
    """Raised when a proven invariant fails, which means a library bug."""
