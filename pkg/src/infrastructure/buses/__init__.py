"""
Query dispatch infrastructure.

Usage:
    query_bus = providers.Singleton(
        BusesModule.create_query_bus,
        config_service=config_service,
        logger=logger,
    )
"""

from .adapters import InMemoryQueryBus
from .buses_module import BusesModule
from .factory import QueryBusFactory

__all__ = [
    "BusesModule",
    "QueryBusFactory",
    "InMemoryQueryBus",
]
