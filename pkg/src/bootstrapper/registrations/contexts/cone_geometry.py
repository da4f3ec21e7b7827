"""Cone Geometry context registrations."""

from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from shared.application.ports import ILogger, IQueryBus


def register_queries(query_bus: "IQueryBus", container: Any, logger: "ILogger") -> None:
    """
    Register query handlers for Cone Geometry.

    Uses Composition metadata for handler mappings (single source of truth).
    """
    from contexts.cone_geometry.composition import ConeGeometryComposition

    for query_type, handler_type in ConeGeometryComposition.QUERY_HANDLERS.items():
        provider_name = ConeGeometryComposition.get_handler_provider_name(handler_type)
        handler = getattr(container.cone_geometry, provider_name)()
        query_bus.register(query_type, handler)

    logger.debug(
        f"Cone Geometry: {len(ConeGeometryComposition.QUERY_HANDLERS)} queries registered"
    )


def register_error_codes(logger: "ILogger") -> None:
    from contexts.cone_geometry.domain.errors import register_cone_error_codes

    register_cone_error_codes()
    logger.debug("Cone Geometry: error codes registered")


def register_all(container: Any, query_bus: "IQueryBus", logger: "ILogger") -> None:
    register_queries(query_bus, container, logger)
