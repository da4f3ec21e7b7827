"""Logger port. Adapters: StandardLoggerAdapter, StructlogLoggerAdapter."""

from typing import Any, Protocol, runtime_checkable


@runtime_checkable
class ILogger(Protocol):
    """
    Everything goes to stderr; stdout is reserved for the JSON report.

    Structured fields travel in ``extra``:

        logger.debug("Dykstra converged", extra={"cycles": 412, "residual": 3e-11})
    """

    def debug(self, message: str, *args: Any, **kwargs: Any) -> None:
        ...

    def info(self, message: str, *args: Any, **kwargs: Any) -> None:
        ...

    def warning(self, message: str, *args: Any, **kwargs: Any) -> None:
        ...

    def error(self, message: str, *args: Any, **kwargs: Any) -> None:
        ...

    def critical(self, message: str, *args: Any, **kwargs: Any) -> None:
        ...

    def exception(self, message: str, *args: Any, **kwargs: Any) -> None:
        ...

    def set_context(self, **kwargs: Any) -> None:
        """Bind fields (command, seed) to every later record until unbound or cleared."""
        ...

    def unbind_context(self, *keys: str) -> None:
        """Drop only ``keys`` from the bound fields."""
        ...

    def clear_context(self) -> None:
        ...

    def get_child(self, name: str) -> "ILogger":
        ...

    def health_check(self) -> bool:
        ...

    def initialize(self) -> None:
        ...

    def close(self) -> None:
        ...
