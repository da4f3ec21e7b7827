"""
Logger Adapters.

Available adapters:
- StandardLoggerAdapter: stdlib logging with JSON (python-json-logger) or colored text
- StructlogLoggerAdapter: structlog with JSON or console rendering
"""

from .standard import StandardLoggerAdapter
from .structlog import StructlogLoggerAdapter

__all__ = [
    "StandardLoggerAdapter",
    "StructlogLoggerAdapter",
]
