"""
Infrastructure Layer.

Technical concerns behind the shared ports, each a module composing
adapters from configuration:
- config: ConfigModule / ConfigService (pydantic-settings + .env files)
- logging: LoggingModule (stdlib + python-json-logger, or structlog)
- buses: BusesModule / QueryBusFactory (in-memory query dispatch)

Usage:
    from infrastructure import BusesModule, ConfigModule, LoggingModule
"""

from .buses import BusesModule, QueryBusFactory
from .config import ConfigModule, ConfigService
from .logging import LoggingModule

__all__ = [
    "BusesModule",
    "ConfigModule",
    "ConfigService",
    "LoggingModule",
    "QueryBusFactory",
]
