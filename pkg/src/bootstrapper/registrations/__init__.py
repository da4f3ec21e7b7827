"""
Registrations - Centralized handler and error-code registrations.

Architecture:
─────────────
bootstrapper/registrations/
├── __init__.py              # This file - register_all(), register_error_codes()
└── contexts/
    ├── __init__.py          # Collect all contexts
    ├── cone_geometry.py
    ├── order_properties.py
    └── complementarity.py

Usage:
──────
from bootstrapper.registrations import register_all, register_error_codes
register_error_codes(logger)
register_all(container, logger)
"""

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from bootstrapper.containers import ApplicationContainer
    from shared.application.ports import ILogger


def register_all(container: "ApplicationContainer", logger: "ILogger") -> None:
    """
    Register every context's query handlers on the query bus.

    Args:
        container: Application DI container
        logger: Logger instance
    """
    from .contexts import complementarity, cone_geometry, order_properties

    query_bus = container.infrastructure.query_bus()

    cone_geometry.register_all(container=container, query_bus=query_bus, logger=logger)
    order_properties.register_all(container=container, query_bus=query_bus, logger=logger)
    complementarity.register_all(container=container, query_bus=query_bus, logger=logger)

    logger.debug(f"Registrations complete: {len(query_bus.registered_queries)} queries")


def register_error_codes(logger: "ILogger") -> None:
    """Register all bounded context error codes with the global registry."""
    from .contexts import complementarity, cone_geometry, order_properties

    cone_geometry.register_error_codes(logger)
    order_properties.register_error_codes(logger)
    complementarity.register_error_codes(logger)
