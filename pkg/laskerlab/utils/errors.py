"""
Error Types

Exception hierarchy shared by the library and the command line. The CLI maps
``ParseError`` to exit code 64 and every ``ValidationError`` to exit code 65.
Mathematical refutations are not errors: predicates return certificates with
a false verdict instead.
"""

from typing import List, Optional


class LaskerLabError(Exception):
    """Base class for all laskerlab errors."""

    exit_code = 65


class ParseError(LaskerLabError):
    """Input could not be read or is not well-formed JSON/YAML."""

    exit_code = 64


class ValidationError(LaskerLabError):
    """Input parsed but does not describe a valid object or violates a precondition."""

    exit_code = 65


class RingConstructionError(ValidationError):
    """A ring specification could not be turned into a valid ring."""


class CrossRingError(ValidationError):
    """Elements or ideals of different rings were mixed."""


class InfiniteRingError(ValidationError):
    """An operation that needs a finite ring was called on the integers."""

    def __init__(self, operation: str):
        super().__init__(f"{operation}: infinite ring")
        self.operation = operation


class ImproperIdealError(ValidationError):
    """A proper ideal was required."""


class MultiplicativeSetError(ValidationError):
    """A multiplicative closure reached zero, or a given set is not closed."""

    def __init__(self, message: str, chain: Optional[List[str]] = None):
        super().__init__(message)
        self.chain = chain or []


class MeetsMultiplicativeSetError(ValidationError):
    """The ideal meets S although the operation needs it disjoint from S."""


class UnsupportedShapeError(ValidationError):
    """The multiplicative set has a shape the integer engine does not decide."""


class DecompositionValidationError(ValidationError):
    """A supplied decomposition does not decompose its target."""


class ColonSplitPreconditionError(ValidationError):
    """(I : s) differs from (I : s^2), so the colon split is not guaranteed."""


class MinimalizationError(ValidationError):
    """No element of S saturates every component at once."""
