"""
ILogger over the stdlib logging tree.

Context bound with ``set_context`` (command, seed) lives in a ContextVar and is
merged into each record's ``extra``, so it reaches both the JSON and the text
formatter.
"""

import logging
from contextvars import ContextVar
from typing import Any, Dict, Optional

from config.logging import StandardLoggerConfig
from infrastructure.logging.adapters.formatters import setup_logging

_log_context: ContextVar[Dict[str, Any]] = ContextVar("conelab_log_context", default={})


class StandardLoggerAdapter:
    """
    Example:
        adapter = StandardLoggerAdapter(StandardLoggerConfig.from_config(LoggingConfig()))
        adapter.initialize()
        adapter.set_context(command="check-duality", seed=7)
        adapter.debug("Falsifier started", extra={"samples": 10000})
    """

    def __init__(self, config: StandardLoggerConfig, name: str = "conelab"):
        self._config = config
        self._name = name
        self._logger: Optional[logging.Logger] = None

    def initialize(self) -> None:
        if self._logger is None:
            self._logger = setup_logging(
                logger_name=self._name,
                level=self._config.level,
                format_type=self._config.format,
                colored=self._config.console_colored,
            )

    def close(self) -> None:
        if self._logger:
            for handler in self._logger.handlers:
                handler.flush()

    def health_check(self) -> bool:
        return self._logger is not None and self._logger.hasHandlers()

    def debug(self, message: str, *args: Any, **kwargs: Any) -> None:
        self._log(logging.DEBUG, message, *args, **kwargs)

    def info(self, message: str, *args: Any, **kwargs: Any) -> None:
        self._log(logging.INFO, message, *args, **kwargs)

    def warning(self, message: str, *args: Any, **kwargs: Any) -> None:
        self._log(logging.WARNING, message, *args, **kwargs)

    def error(self, message: str, *args: Any, **kwargs: Any) -> None:
        self._log(logging.ERROR, message, *args, **kwargs)

    def critical(self, message: str, *args: Any, **kwargs: Any) -> None:
        self._log(logging.CRITICAL, message, *args, **kwargs)

    def exception(self, message: str, *args: Any, **kwargs: Any) -> None:
        self._log(logging.ERROR, message, *args, exc_info=True, **kwargs)

    def set_context(self, **kwargs: Any) -> None:
        _log_context.set({**_log_context.get(), **kwargs})

    def unbind_context(self, *keys: str) -> None:
        _log_context.set({k: v for k, v in _log_context.get().items() if k not in keys})

    def clear_context(self) -> None:
        _log_context.set({})

    def get_child(self, name: str) -> "StandardLoggerAdapter":
        """Child shares the parent's handler through logger propagation."""
        child = StandardLoggerAdapter(self._config, f"{self._name}.{name}")
        if self._logger is not None:
            child._logger = self._logger.getChild(name)
        return child

    def _log(self, level: int, message: str, *args: Any, **kwargs: Any) -> None:
        if self._logger is None or not self._logger.isEnabledFor(level):
            return
        extra = {**_log_context.get(), **(kwargs.pop("extra", None) or {})}
        if not self._config.include_extra_fields:
            extra = {}
        self._logger.log(level, message, *args, extra=extra, **kwargs)
