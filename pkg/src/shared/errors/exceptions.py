"""
Application exceptions.

Domain services raise them; query handlers turn the expected ones into failed
Results, and ``shared.presentation.error_handler`` renders whatever escapes.
Each carries the exit status the CLI terminates with.
"""

from enum import Enum
from typing import Any, Dict, List, Optional, Union

from pydantic import ValidationError

from .error_codes import ErrorCode, ExitStatus


def flatten_validation_errors(exc: ValidationError) -> List[Dict[str, str]]:
    """pydantic errors as ``{"field", "message", "type"}``; ``field`` is the dotted location."""
    return [
        {
            "field": ".".join(str(part) for part in error["loc"]) or "input",
            "message": error["msg"],
            "type": error["type"],
        }
        for error in exc.errors(include_url=False)
    ]


class BaseException(Exception):
    """
    Args:
        message: human-readable, ends up in the error document
        error_code: shared ``ErrorCode`` or a context code such as ``CONE_010``
        exit_status: status the CLI exits with when this escapes
        details: JSON-safe context (names, dimensions, residuals)
    """

    def __init__(
        self,
        message: str,
        error_code: Union[str, Enum],
        exit_status: ExitStatus = ExitStatus.INTERNAL_ERROR,
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message)
        self.message = message
        self.error_code = error_code.value if isinstance(error_code, Enum) else str(error_code)
        self.exit_status = exit_status
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        return {"error": {"code": self.error_code, "message": self.message, "details": self.details}}


class DomainException(BaseException):
    """Base of every context exception; bad input (exit 2) unless the subclass says otherwise."""

    def __init__(
        self,
        message: str,
        error_code: Union[str, Enum],
        details: Optional[Dict[str, Any]] = None,
        exit_status: ExitStatus = ExitStatus.INPUT_ERROR,
    ):
        super().__init__(message, error_code, exit_status, details)


class ValidationException(BaseException):
    """A request model rejected the flags or ``--input`` document."""

    def __init__(self, message: str, errors: Any):
        super().__init__(message, ErrorCode.VALIDATION_ERROR, ExitStatus.INPUT_ERROR, {"errors": errors})

    @classmethod
    def from_pydantic(cls, exc: ValidationError) -> "ValidationException":
        return cls("Input validation failed", flatten_validation_errors(exc))


class ConfigurationException(BaseException):
    """A settings section rejected its environment variables."""

    def __init__(self, section: str, errors: Any):
        super().__init__(
            f"Invalid {section} settings",
            ErrorCode.CONFIGURATION_ERROR,
            ExitStatus.INPUT_ERROR,
            {"section": section, "errors": errors},
        )


class BadRequestException(BaseException):
    """Usage errors, unreadable ``--input`` files, undecodable JSON arguments."""

    def __init__(
        self,
        message: str,
        details: Optional[Dict[str, Any]] = None,
        error_code: Union[str, Enum] = ErrorCode.BAD_REQUEST,
    ):
        super().__init__(message, error_code, ExitStatus.INPUT_ERROR, details)


class InternalException(BaseException):
    """Wraps an unexpected exception; the original type and text go into details."""

    def __init__(self, message: str = "Internal error", details: Optional[Dict[str, Any]] = None):
        super().__init__(message, ErrorCode.INTERNAL_ERROR, ExitStatus.INTERNAL_ERROR, details)

    @classmethod
    def wrap(cls, exc: Exception) -> "InternalException":
        return cls(details={"type": type(exc).__name__, "reason": str(exc)})
