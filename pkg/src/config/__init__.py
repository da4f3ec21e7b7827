"""
Settings sections, one pydantic-settings class per concern.

    from infrastructure.config import ConfigModule
    numerics = ConfigModule.create_service().numerics
"""

from .base import BaseConfig
from .buses import BusesConfig
from .logging import LoggingConfig, StandardLoggerConfig, StructlogLoggerConfig
from .numerics import NumericsConfig
from .types import (
    BaseConfigType,
    BusAdapterType,
    BusesConfigType,
    ConfigName,
    LoggingConfigType,
    NumericsConfigType,
    StandardLoggerConfigType,
    StructlogLoggerConfigType,
)

# Loaded in this order by ConfigModule.create_service()
CONFIG_MAPPING = {
    ConfigName.BASE: BaseConfig,
    ConfigName.BUSES: BusesConfig,
    ConfigName.LOGGING: LoggingConfig,
    ConfigName.NUMERICS: NumericsConfig,
}

__all__ = [
    "CONFIG_MAPPING",
    "ConfigName",
    "BaseConfig",
    "BusesConfig",
    "LoggingConfig",
    "StandardLoggerConfig",
    "StructlogLoggerConfig",
    "NumericsConfig",
    "BaseConfigType",
    "BusAdapterType",
    "BusesConfigType",
    "LoggingConfigType",
    "StandardLoggerConfigType",
    "StructlogLoggerConfigType",
    "NumericsConfigType",
]
