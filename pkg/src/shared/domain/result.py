"""
Result type returned by every query handler.

Domain services raise; handlers catch the expected failures (non-convergence,
malformed cones, dimension mismatches) and hand back ``Result.fail`` so the
CLI maps them to exit statuses through the error-code registry.
"""

from dataclasses import dataclass
from typing import Any, Callable, Dict, Generic, Optional, TypeVar

T = TypeVar("T")
U = TypeVar("U")


@dataclass(frozen=True)
class Error:
    """A failure: registry code (e.g. ``CONE_010``), message and JSON-safe details."""

    code: str
    message: str
    details: Optional[Dict[str, Any]] = None

    def __str__(self) -> str:
        return f"[{self.code}] {self.message}"


@dataclass(frozen=True)
class Result(Generic[T]):
    """
    Example:
        try:
            outcome = project(x, cone, tol)
        except NonConvergenceException as e:
            return Result.from_exception(e)
        return Result.ok(ProjectionReadModel.from_domain(cone, outcome))
    """

    _value: Optional[T] = None
    _error: Optional[Error] = None

    @classmethod
    def ok(cls, value: T) -> "Result[T]":
        return cls(_value=value)

    @classmethod
    def fail(cls, code: str, message: str, details: Optional[Dict[str, Any]] = None) -> "Result[T]":
        return cls(_error=Error(code, message, details))

    @classmethod
    def from_exception(
        cls, exc: Exception, code: Optional[str] = None, details: Optional[Dict[str, Any]] = None
    ) -> "Result[T]":
        """Code and details default to the exception's ``error_code`` and ``details``."""
        return cls.fail(
            code=code or str(getattr(exc, "error_code", "INTERNAL_ERROR")),
            message=str(exc),
            details=details if details is not None else getattr(exc, "details", None),
        )

    @property
    def is_success(self) -> bool:
        return self._error is None

    @property
    def is_failure(self) -> bool:
        return self._error is not None

    @property
    def value(self) -> T:
        if self._error is not None:
            raise ValueError(f"Cannot get value from failed result: {self._error}")
        return self._value  # type: ignore[return-value]

    @property
    def error(self) -> Error:
        if self._error is None:
            raise ValueError("Cannot get error from successful result")
        return self._error

    @property
    def error_code(self) -> Optional[str]:
        return self._error.code if self._error else None

    def map(self, func: Callable[[T], U]) -> "Result[U]":
        if self._error is not None:
            return Result(_error=self._error)
        return Result.ok(func(self._value))  # type: ignore[arg-type]

    def __bool__(self) -> bool:
        return self.is_success
