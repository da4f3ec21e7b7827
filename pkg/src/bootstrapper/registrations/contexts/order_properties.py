"""Order Properties context registrations."""

from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from shared.application.ports import ILogger, IQueryBus


def register_queries(query_bus: "IQueryBus", container: Any, logger: "ILogger") -> None:
    """Register query handlers for Order Properties."""
    from contexts.order_properties.composition import OrderPropertiesComposition

    for query_type, handler_type in OrderPropertiesComposition.QUERY_HANDLERS.items():
        provider_name = OrderPropertiesComposition.get_handler_provider_name(handler_type)
        handler = getattr(container.order_properties, provider_name)()
        query_bus.register(query_type, handler)

    logger.debug(
        f"Order Properties: {len(OrderPropertiesComposition.QUERY_HANDLERS)} queries registered"
    )


def register_error_codes(logger: "ILogger") -> None:
    from contexts.order_properties.domain.errors import register_property_error_codes

    register_property_error_codes()
    logger.debug("Order Properties: error codes registered")


def register_all(container: Any, query_bus: "IQueryBus", logger: "ILogger") -> None:
    register_queries(query_bus, container, logger)
