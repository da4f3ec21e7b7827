"""Logging settings: LoggingConfig plus the per-adapter views derived from it."""

from .logging import LoggingConfig
from .standard import StandardLoggerConfig
from .structlog import StructlogLoggerConfig

__all__ = [
    "LoggingConfig",
    "StandardLoggerConfig",
    "StructlogLoggerConfig",
]
