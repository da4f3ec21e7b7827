"""Complementarity context registrations."""

from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from shared.application.ports import ILogger, IQueryBus


def register_queries(query_bus: "IQueryBus", container: Any, logger: "ILogger") -> None:
    """Register query handlers for Complementarity."""
    from contexts.complementarity.composition import ComplementarityComposition

    for query_type, handler_type in ComplementarityComposition.QUERY_HANDLERS.items():
        provider_name = ComplementarityComposition.get_handler_provider_name(handler_type)
        handler = getattr(container.complementarity, provider_name)()
        query_bus.register(query_type, handler)

    logger.debug(
        f"Complementarity: {len(ComplementarityComposition.QUERY_HANDLERS)} queries registered"
    )


def register_error_codes(logger: "ILogger") -> None:
    from contexts.complementarity.domain.errors import register_ncp_error_codes

    register_ncp_error_codes()
    logger.debug("Complementarity: error codes registered")


def register_all(container: Any, query_bus: "IQueryBus", logger: "ILogger") -> None:
    register_queries(query_bus, container, logger)
