"""Builds the query bus for a configured adapter."""

from typing import TYPE_CHECKING, Optional

from config.types import BusAdapterType
from shared.application.ports.query_bus import IQueryBus

if TYPE_CHECKING:
    from config.buses import BusesConfig
    from shared.application.ports import ILogger


class QueryBusFactory:
    @staticmethod
    def create(
        config: "BusesConfig",
        logger: Optional["ILogger"] = None,
    ) -> IQueryBus:
        """
        Raises:
            ValueError: for an adapter name with no implementation
        """
        adapter_type = BusAdapterType(config.BUS_ADAPTER)
        match adapter_type:
            case BusAdapterType.IN_MEMORY:
                from .adapters.in_memory import InMemoryQueryBus

                return InMemoryQueryBus(
                    logger,
                    slow_query_seconds=config.BUS_SLOW_QUERY_SECONDS,
                    log_timings=config.BUS_LOG_TIMINGS,
                )
            case _:
                raise ValueError(f"Unsupported query bus adapter: {adapter_type}")
