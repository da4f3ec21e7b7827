"""
structlog Logger Adapter.

Implements ILogger on top of structlog. Context set through set_context() is
bound with structlog's contextvars support and merged into every event.
"""

import logging
import sys
from typing import Any, Optional

import structlog

from config.logging import StructlogLoggerConfig


def _stderr_logger_factory(*args: Any) -> structlog.PrintLogger:
    return structlog.PrintLogger(file=sys.stderr)


class StructlogLoggerAdapter:
    """
    structlog adapter implementing ILogger.

    Example:
        adapter = StructlogLoggerAdapter(config=adapter_config, name="conelab")
        adapter.initialize()
        adapter.debug("Projection done", extra={"method": "dykstra", "iterations": 412})
    """

    def __init__(
        self,
        config: StructlogLoggerConfig,
        name: str = "conelab",
    ):
        self._config = config
        self._name = name
        self._logger: Optional[Any] = None
        self._initialized = False

    def initialize(self) -> None:
        if self._initialized:
            return

        renderer: Any
        if self._config.json_output:
            renderer = structlog.processors.JSONRenderer(sort_keys=True)
        else:
            renderer = structlog.dev.ConsoleRenderer(colors=self._config.colored)

        structlog.configure(
            processors=[
                structlog.contextvars.merge_contextvars,
                structlog.processors.add_log_level,
                structlog.processors.TimeStamper(fmt="iso", utc=True),
                structlog.processors.format_exc_info,
                renderer,
            ],
            wrapper_class=structlog.make_filtering_bound_logger(
                getattr(logging, self._config.level.upper())
            ),
            logger_factory=_stderr_logger_factory,
            cache_logger_on_first_use=False,
        )
        self._logger = structlog.get_logger().bind(logger=self._name)
        self._initialized = True

    def close(self) -> None:
        sys.stderr.flush()

    def health_check(self) -> bool:
        return self._initialized and self._logger is not None

    def debug(self, message: str, *args: Any, **kwargs: Any) -> None:
        self._log("debug", message, *args, **kwargs)

    def info(self, message: str, *args: Any, **kwargs: Any) -> None:
        self._log("info", message, *args, **kwargs)

    def warning(self, message: str, *args: Any, **kwargs: Any) -> None:
        self._log("warning", message, *args, **kwargs)

    def error(self, message: str, *args: Any, **kwargs: Any) -> None:
        self._log("error", message, *args, **kwargs)

    def critical(self, message: str, *args: Any, **kwargs: Any) -> None:
        self._log("critical", message, *args, **kwargs)

    def exception(self, message: str, *args: Any, **kwargs: Any) -> None:
        kwargs["exc_info"] = True
        self._log("error", message, *args, **kwargs)

    def set_context(self, **kwargs: Any) -> None:
        structlog.contextvars.bind_contextvars(**kwargs)

    def unbind_context(self, *keys: str) -> None:
        structlog.contextvars.unbind_contextvars(*keys)

    def clear_context(self) -> None:
        structlog.contextvars.clear_contextvars()

    def get_child(self, name: str) -> "StructlogLoggerAdapter":
        child = StructlogLoggerAdapter(config=self._config, name=f"{self._name}.{name}")
        child._logger = self._logger.bind(logger=child._name) if self._logger else None
        child._initialized = self._initialized
        return child

    def _log(self, method: str, message: str, *args: Any, **kwargs: Any) -> None:
        if not self._logger:
            return

        fields = dict(kwargs.pop("extra", {}) or {})
        if kwargs.pop("exc_info", False):
            fields["exc_info"] = True
        if args:
            message = message % args

        getattr(self._logger, method)(message, **fields)
