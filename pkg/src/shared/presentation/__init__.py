"""
CLI-side helpers: CommandResponse (JSON document plus exit status), BaseController
(Result → response) and the exception → response mapping.
"""

from .base_controller import BaseController
from .error_handler import configure_logger, exception_to_response, result_error_to_response
from .response import CommandResponse

__all__ = [
    "BaseController",
    "CommandResponse",
    "configure_logger",
    "exception_to_response",
    "result_error_to_response",
]
