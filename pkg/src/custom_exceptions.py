"""
Custom exceptions for the GHRS codes toolkit.
Provides centralized error definitions with error codes for easier debugging.
"""

from typing import Optional, Sequence


class GHRSError(Exception):
    """Base exception class for all GHRS toolkit errors."""

    def __init__(self, message: str, error_code: int):
        """
        Initialize the base exception.

        Args:
            message: Descriptive error message
            error_code: Numeric error code identifying the error type
        """
        self.error_code = error_code
        self.message = message
        super().__init__(f"[Error {error_code}] {message}")


# Configuration Errors (1000-1999)
class ConfigurationError(GHRSError):
    """Base class for configuration related errors."""

    def __init__(self, message: str, error_code: int = 1000):
        super().__init__(message, error_code)


class MissingConfigurationError(ConfigurationError):
    """Error raised when a configuration file or key is missing."""

    def __init__(self, config_key: str, error_code: int = 1001):
        super().__init__(f"Missing required configuration: {config_key}", error_code)


class InvalidConfigurationError(ConfigurationError):
    """Error raised when a configuration value is invalid."""

    def __init__(self, config_key: str, reason: str, error_code: int = 1002):
        super().__init__(
            f"Invalid configuration value for {config_key}: {reason}", error_code
        )


# Field Errors (2000-2999)
class FieldError(GHRSError):
    """Base class for finite field errors."""

    def __init__(self, message: str, error_code: int = 2000):
        super().__init__(message, error_code)


class InvalidFieldSpecError(FieldError):
    """Error raised when p is not prime, the modulus is reducible or q is too big."""

    def __init__(self, spec: str, reason: str, error_code: int = 2001):
        self.spec = spec
        super().__init__(f"Invalid field {spec!r}: {reason}", error_code)


class FieldMismatchError(FieldError):
    """Error raised when operands live in different fields."""

    def __init__(self, left: str, right: str, error_code: int = 2002):
        super().__init__(f"Operands belong to different fields: {left} vs {right}",
                         error_code)


class DivisionByZeroError(FieldError, ZeroDivisionError):
    """Error raised on division by the zero element."""

    def __init__(self, context: str = "field division", error_code: int = 2003):
        super().__init__(f"Division by zero in {context}", error_code)


# Input Errors (3000-3999)
class InputError(GHRSError):
    """Base class for malformed input, shapes and parameters."""

    def __init__(self, message: str, error_code: int = 3000):
        super().__init__(message, error_code)


class ParseError(InputError):
    """Error raised when a text input cannot be parsed."""

    def __init__(self, what: str, reason: str, line: Optional[int] = None,
                 error_code: int = 3001):
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"Cannot parse {what}{where}: {reason}", error_code)


class DimensionMismatchError(InputError):
    """Error raised when matrix or vector shapes disagree."""

    def __init__(self, expected: Sequence[int], actual: Sequence[int],
                 error_code: int = 3002):
        self.expected = tuple(expected)
        self.actual = tuple(actual)
        super().__init__(
            f"Shape mismatch: expected {self.expected}, got {self.actual}", error_code
        )


class DegreeTooHighError(InputError):
    """Error raised when a polynomial exceeds the allowed degree."""

    def __init__(self, degree: int, limit: int, error_code: int = 3003):
        super().__init__(f"Polynomial degree {degree} exceeds {limit}", error_code)


class DuplicatePointsError(InputError):
    """Error raised when evaluation points are not pairwise distinct."""

    def __init__(self, points: Sequence[int], error_code: int = 3004):
        super().__init__(f"Evaluation points are not distinct: {list(points)}",
                         error_code)


class ZeroMultiplierError(InputError):
    """Error raised when a multiplier matrix needs nonzero entries and has a zero."""

    def __init__(self, row: int, col: int, error_code: int = 3005):
        super().__init__(f"Multiplier entry ({row}, {col}) is zero", error_code)


class ZeroSeedError(InputError):
    """Error raised when a quasi-cyclic seed has a zero entry."""

    def __init__(self, index: int, error_code: int = 3006):
        super().__init__(f"Seed entry {index} is zero", error_code)


class OrderMismatchError(InputError):
    """Error raised when an element does not have the requested multiplicative order."""

    def __init__(self, element: int, expected: int, actual: Optional[int],
                 error_code: int = 3007):
        super().__init__(
            f"Element {element} has multiplicative order {actual}, expected {expected}",
            error_code,
        )


class HypothesisViolationError(InputError):
    """Error raised when parameters fall outside the hypotheses of a construction or bound."""

    def __init__(self, reason: str, error_code: int = 3008):
        super().__init__(f"Hypothesis violated: {reason}", error_code)


class CaseOutOfRangeError(InputError):
    """Error raised when (r, s, t) matches no zero-count case."""

    def __init__(self, r: int, s: int, t: int, error_code: int = 3009):
        super().__init__(f"No zero-count case applies to r={r}, s={s}, t={t}",
                         error_code)


# Computation Errors (4000-4999)
class ComputationError(GHRSError):
    """Base class for computations that cannot be completed."""

    def __init__(self, message: str, error_code: int = 4000):
        super().__init__(message, error_code)


class BudgetExceededError(ComputationError):
    """Error raised when an exhaustive search exceeds its budget."""

    def __init__(self, size: int, budget: int, error_code: int = 4001):
        self.size = size
        self.budget = budget
        super().__init__(
            f"Exhaustive search over {size} messages exceeds budget {budget}",
            error_code,
        )


class DegenerateSystemError(ComputationError):
    """Error raised when a null space has an unexpected dimension."""

    def __init__(self, expected: int, actual: int, error_code: int = 4002):
        super().__init__(
            f"Null space has dimension {actual}, expected {expected}", error_code
        )


# Verification Errors (5000-5999)
class VerificationError(GHRSError):
    """Error raised when an identity that must hold does not."""

    def __init__(self, message: str, error_code: int = 5000):
        super().__init__(message, error_code)
