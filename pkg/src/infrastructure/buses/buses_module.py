"""BusesModule: composes the query bus from ConfigService; the DI container owns it."""

from config.buses import BusesConfig
from shared.application.ports import IConfigService, ILogger, IQueryBus

from .factory import QueryBusFactory


class BusesModule:
    @staticmethod
    def create_query_bus(config_service: IConfigService, logger: ILogger) -> IQueryBus:
        """Build the bus from the ``buses`` section, falling back to defaults when absent."""
        config = config_service.buses or BusesConfig()
        return QueryBusFactory.create(config, logger)
