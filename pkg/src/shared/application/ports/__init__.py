"""Ports implemented by ``infrastructure``: configuration, logging and query dispatch."""

from .config import IConfigService
from .logger import ILogger
from .query_bus import IQueryBus

__all__ = [
    "IConfigService",
    "ILogger",
    "IQueryBus",
]
