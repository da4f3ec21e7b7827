"""Picks, initializes and health-checks the logger adapter named by LOG_ADAPTER."""

from config.logging import LoggingConfig, StandardLoggerConfig, StructlogLoggerConfig
from shared.application.ports import ILogger

from .adapters.standard import StandardLoggerAdapter
from .adapters.structlog import StructlogLoggerAdapter


class LoggerFactory:
    @staticmethod
    def create(logging_config: LoggingConfig, name: str = "conelab") -> ILogger:
        """
        Raises:
            ValueError: unknown adapter name
            RuntimeError: the adapter failed its health check after initialize()
        """
        adapter: ILogger
        match logging_config.LOG_ADAPTER:
            case "standard":
                adapter = StandardLoggerAdapter(StandardLoggerConfig.from_config(logging_config), name)
            case "structlog":
                adapter = StructlogLoggerAdapter(StructlogLoggerConfig.from_config(logging_config), name)
            case other:
                raise ValueError(f"Unknown logger adapter type: {other}")

        adapter.initialize()
        if not adapter.health_check():
            raise RuntimeError(f"Logger adapter health check failed: {logging_config.LOG_ADAPTER}")
        return adapter
