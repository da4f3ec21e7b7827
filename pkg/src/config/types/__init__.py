"""
TypedDict shapes returned by each settings section's to_dict(), plus the
ConfigName keys of ConfigService.
"""

from enum import Enum

from .base import BaseConfigType
from .buses import BusAdapterType, BusesConfigType
from .logging import LoggingConfigType, StandardLoggerConfigType, StructlogLoggerConfigType
from .numerics import NumericsConfigType


class ConfigName(str, Enum):
    """Configuration concern names for ConfigService.get(name)."""

    BASE = "base"
    BUSES = "buses"
    LOGGING = "logging"
    NUMERICS = "numerics"


__all__ = [
    "ConfigName",
    "BaseConfigType",
    "BusAdapterType",
    "BusesConfigType",
    "LoggingConfigType",
    "StandardLoggerConfigType",
    "StructlogLoggerConfigType",
    "NumericsConfigType",
]
