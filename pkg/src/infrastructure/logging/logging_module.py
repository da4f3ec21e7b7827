"""
LoggingModule: builds the process logger from the ``logging`` settings
section. The DI container keeps it as a Singleton.

    LoggingModule.create_logger ─▶ LoggerFactory.create ─▶ ILogger (stderr)
"""

from config.logging import LoggingConfig
from shared.application.ports import IConfigService, ILogger

from .factory import LoggerFactory


class LoggingModule:
    @staticmethod
    def create_logger(config_service: IConfigService, name: str = "conelab") -> ILogger:
        return LoggerFactory.create(config_service.logging or LoggingConfig(), name)
