"""
Main Application DI Container.

Architecture:
─────────────
ApplicationContainer (this file)
├── InfrastructureContainer (bootstrapper/containers/)
├── ConeGeometryContainer (bootstrapper/containers/contexts/)
├── OrderPropertiesContainer (bootstrapper/containers/contexts/)
└── ComplementarityContainer (bootstrapper/containers/contexts/)
"""

from dependency_injector import containers, providers

from .contexts import ComplementarityContainer, ConeGeometryContainer, OrderPropertiesContainer
from .infrastructure_container import InfrastructureContainer


class ApplicationContainer(containers.DeclarativeContainer):
    """
    Main application container.

    Usage:
        container = ApplicationContainer()
        container.config.from_dict({"environment": "testing"})

        query_bus = container.infrastructure.query_bus()
        result = await query_bus.dispatch(ProjectQuery(...))
    """

    # Configuration
    config = providers.Configuration()

    # Infrastructure container (config service, logger, query bus)
    infrastructure = providers.Container(InfrastructureContainer, config=config)

    # Bounded Context containers
    cone_geometry = providers.Container(
        ConeGeometryContainer,
        config_service=infrastructure.config_service,
        logger=infrastructure.logger,
    )

    order_properties = providers.Container(
        OrderPropertiesContainer,
        config_service=infrastructure.config_service,
        logger=infrastructure.logger,
    )

    complementarity = providers.Container(
        ComplementarityContainer,
        config_service=infrastructure.config_service,
        logger=infrastructure.logger,
    )
