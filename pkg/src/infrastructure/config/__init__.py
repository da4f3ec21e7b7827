"""Settings loading (ConfigModule) and typed access (ConfigService)."""

from .config_module import ConfigModule
from .config_service import ConfigService

__all__ = [
    "ConfigModule",
    "ConfigService",
]
