from typing import Any


class AppException(Exception):
    """Base exception for the application."""

    code: str = "APP_EXCEPTION"
    exit_code: int = 1

    def __init__(self, message: str = None, details: Any = None):
        self.message = message or "An application error occurred"
        self.details = details
        super().__init__(self.message)


class ValidationError(AppException):
    """Exception raised for invalid input or configuration."""

    code = "VALIDATION_ERROR"
    exit_code = 2

    def __init__(self, message: str = "Validation failed", details: Any = None):
        super().__init__(message, details)


class NotFoundError(AppException):
    """Exception raised when a builtin, file or resource is not found."""

    code = "NOT_FOUND_ERROR"
    exit_code = 2

    def __init__(self, message: str = "Resource not found", details: Any = None):
        super().__init__(message, details)


class ConstructionError(AppException):
    """Exception raised when a Lie algebra or pencil cannot be constructed."""

    code = "CONSTRUCTION_ERROR"
    exit_code = 2

    def __init__(self, message: str = "Construction failed", details: Any = None):
        super().__init__(message, details)


class GradingError(AppException):
    """Exception raised when an operator leaves the graded bracket class."""

    code = "GRADING_ERROR"

    def __init__(self, message: str = "Operator violates the grading", details: Any = None):
        super().__init__(message, details)


class SkewAdjointnessError(AppException):
    """Exception raised when a Poisson operator is not skew-adjoint."""

    code = "SKEW_ADJOINTNESS_ERROR"

    def __init__(self, message: str = "Operator is not skew-adjoint", details: Any = None):
        super().__init__(message, details)


class ReductionError(AppException):
    """Exception raised when the D-block of a reduction cannot be inverted."""

    code = "REDUCTION_ERROR"

    def __init__(self, message: str = "Reduction failed", details: Any = None):
        super().__init__(message, details)


class DispersionlessLimitError(AppException):
    """Exception raised for brackets with negative powers of the deformation parameter."""

    code = "DISPERSIONLESS_LIMIT_ERROR"

    def __init__(self, message: str = "no dispersionless limit", details: Any = None):
        super().__init__(message, details)


class SemisimplicityError(AppException):
    """Exception raised when canonical coordinates collide."""

    code = "SEMISIMPLICITY_ERROR"

    def __init__(self, message: str = "Pencil is not semisimple here", details: Any = None):
        super().__init__(message, details)


class MiuraError(AppException):
    """Exception raised for Miura maps that cannot be inverted."""

    code = "MIURA_ERROR"

    def __init__(self, message: str = "Miura map is not invertible", details: Any = None):
        super().__init__(message, details)


class IntegrityError(AppException):
    """Exception raised when a mathematical post-condition fails."""

    code = "INTEGRITY_ERROR"

    def __init__(self, message: str = "Integrity check failed", details: Any = None):
        super().__init__(message, details)


__all__ = [
    "AppException",
    "ValidationError",
    "NotFoundError",
    "ConstructionError",
    "GradingError",
    "SkewAdjointnessError",
    "ReductionError",
    "DispersionlessLimitError",
    "SemisimplicityError",
    "MiuraError",
    "IntegrityError",
]
