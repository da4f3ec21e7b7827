"""
Logging infrastructure behind the ILogger port.

StandardLoggerAdapter writes through the stdlib logging tree (python-json-logger
for JSON); StructlogLoggerAdapter renders with structlog. Both write to stderr.
"""

from .adapters import StandardLoggerAdapter, StructlogLoggerAdapter
from .logging_module import LoggingModule

__all__ = [
    "LoggingModule",
    "StandardLoggerAdapter",
    "StructlogLoggerAdapter",
]
