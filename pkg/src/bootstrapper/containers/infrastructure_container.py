"""
Process-wide singletons: settings, the stderr logger and the query bus.

ConfigModule, LoggingModule and BusesModule only build objects; this
container decides they live once per CLI run.
"""

from dependency_injector import containers, providers

from infrastructure.buses import BusesModule
from infrastructure.config import ConfigModule
from infrastructure.logging import LoggingModule


class InfrastructureContainer(containers.DeclarativeContainer):
    """
    Example:
        container = InfrastructureContainer()
        container.config.from_dict({"environment": "testing"})
        container.config_service().numerics.MEMBERSHIP_TOL
    """

    config = providers.Configuration()

    config_service = providers.Singleton(
        ConfigModule.create_service,
        environment=config.environment,
    )

    logger = providers.Singleton(
        LoggingModule.create_logger,
        config_service=config_service,
    )

    # timing thresholds come from the ``buses`` section
    query_bus = providers.Singleton(
        BusesModule.create_query_bus,
        config_service=config_service,
        logger=logger,
    )
