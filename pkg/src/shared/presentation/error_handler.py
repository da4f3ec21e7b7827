"""
Maps whatever ends a command to the error document and exit status.

Application exceptions keep their code and status, pydantic errors become
VALIDATION_ERROR (exit 2), failed Results take their status from the
registry, and anything else is INTERNAL_ERROR (exit 4).
"""

from typing import TYPE_CHECKING, Optional

from pydantic import ValidationError

from shared.domain.result import Result
from shared.errors.error_codes import ErrorCodeRegistry
from shared.errors.exceptions import BaseException as AppBaseException
from shared.errors.exceptions import InternalException, ValidationException

from .response import CommandResponse

if TYPE_CHECKING:
    from shared.application.ports import ILogger

# set by the CLI once the container exists; errors before that go unlogged
_logger: Optional["ILogger"] = None


def configure_logger(logger: Optional["ILogger"]) -> None:
    global _logger
    _logger = logger


def app_exception_to_response(exc: AppBaseException) -> CommandResponse:
    if _logger:
        log = _logger.exception if isinstance(exc, InternalException) else _logger.warning
        log(exc.message, extra={"error_code": exc.error_code, "exit_status": int(exc.exit_status)})
    return CommandResponse.from_error(
        code=exc.error_code,
        message=exc.message,
        status=exc.exit_status,
        details=exc.details,
    )


def result_error_to_response(result: Result) -> CommandResponse:
    if result.is_success:
        raise ValueError("Cannot convert successful result to error response")

    error = result.error
    status = ErrorCodeRegistry().get_status(error.code)
    if _logger:
        _logger.warning(error.message, extra={"error_code": error.code, "exit_status": int(status)})
    return CommandResponse.from_error(
        code=error.code,
        message=error.message,
        status=status,
        details=error.details,
    )


def exception_to_response(exc: Exception) -> CommandResponse:
    if isinstance(exc, ValidationError):
        exc = ValidationException.from_pydantic(exc)
    elif not isinstance(exc, AppBaseException):
        exc = InternalException.wrap(exc)
    return app_exception_to_response(exc)
