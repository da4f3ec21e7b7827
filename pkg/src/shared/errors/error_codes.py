"""Exit statuses, shared error codes and the code → status registry."""

from enum import Enum
from typing import Dict, Optional, Tuple


class ExitStatus(int, Enum):
    """Process exit statuses; shell scripts branch on these numbers."""

    OK = 0
    FALSIFIED = 1
    INPUT_ERROR = 2
    SOLVER_FAILURE = 3
    INTERNAL_ERROR = 4


class ErrorCode(str, Enum):
    """Codes shared by every context. Context codes (CONE_*, PROP_*, NCP_*) live in each domain/errors."""

    BAD_REQUEST = "BAD_REQUEST"
    MALFORMED_JSON = "MALFORMED_JSON"
    VALIDATION_ERROR = "VALIDATION_ERROR"
    CONFIGURATION_ERROR = "CONFIGURATION_ERROR"

    INTERNAL_ERROR = "INTERNAL_ERROR"
    HANDLER_NOT_FOUND = "HANDLER_NOT_FOUND"

    def __str__(self) -> str:
        return self.value


_SHARED_CODES: Dict[ErrorCode, Tuple[ExitStatus, str]] = {
    ErrorCode.BAD_REQUEST: (ExitStatus.INPUT_ERROR, "Bad request"),
    ErrorCode.MALFORMED_JSON: (ExitStatus.INPUT_ERROR, "Malformed JSON input"),
    ErrorCode.VALIDATION_ERROR: (ExitStatus.INPUT_ERROR, "Validation error"),
    ErrorCode.CONFIGURATION_ERROR: (ExitStatus.INPUT_ERROR, "Invalid environment settings"),
    ErrorCode.INTERNAL_ERROR: (ExitStatus.INTERNAL_ERROR, "Internal error"),
    ErrorCode.HANDLER_NOT_FOUND: (ExitStatus.INTERNAL_ERROR, "No handler registered"),
}


class ErrorCodeRegistry:
    """
    Process-wide mapping from error codes to exit statuses, used to render
    failed Results. Contexts register their codes at bootstrap; an unknown
    code is an internal error.

    Example:
        ErrorCodeRegistry().register("CONE_010", ExitStatus.SOLVER_FAILURE, "Projection did not converge")
        ErrorCodeRegistry().get_status("CONE_010")  # ExitStatus.SOLVER_FAILURE
    """

    _instance: Optional["ErrorCodeRegistry"] = None
    _registry: Dict[str, Tuple[ExitStatus, str]] = {}

    def __new__(cls) -> "ErrorCodeRegistry":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            for code, entry in _SHARED_CODES.items():
                cls._registry[code.value] = entry
        return cls._instance

    def register(self, code: str, exit_status: ExitStatus, description: str) -> None:
        self._registry[code] = (exit_status, description)

    def get(self, code: str) -> Tuple[ExitStatus, str]:
        return self._registry.get(code, (ExitStatus.INTERNAL_ERROR, "Unknown error"))

    def get_status(self, code: str) -> ExitStatus:
        return self.get(code)[0]
