"""structlog Logger Adapter."""

from .adapter import StructlogLoggerAdapter

__all__ = [
    "StructlogLoggerAdapter",
]
