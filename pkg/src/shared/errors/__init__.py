"""
Shared error handling.

Provides both:
- Result Pattern (what handlers return)
- Exception classes (what domain services raise)
"""

from .error_codes import ErrorCode, ErrorCodeRegistry, ExitStatus
from .exceptions import (
    BadRequestException,
    BaseException,
    ConfigurationException,
    DomainException,
    InternalException,
    ValidationException,
    flatten_validation_errors,
)

__all__ = [
    "ErrorCode",
    "ErrorCodeRegistry",
    "ExitStatus",
    "BaseException",
    "DomainException",
    "ValidationException",
    "ConfigurationException",
    "BadRequestException",
    "InternalException",
    "flatten_validation_errors",
]
