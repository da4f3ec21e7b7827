"""
Application factory.

Builds the DI container, registers error codes and wires every context's
query handlers onto the query bus. The CLI calls this once per process.
"""

from typing import Optional

from bootstrapper.containers import ApplicationContainer
from bootstrapper.registrations import register_all, register_error_codes


def create_application(environment: Optional[str] = None) -> ApplicationContainer:
    """
    Application factory function.

    Args:
        environment: Override environment detection (optional)

    Returns:
        Configured ApplicationContainer with a populated query bus
    """
    container = ApplicationContainer()
    container.config.from_dict({"environment": environment})

    logger = container.infrastructure.logger()

    register_error_codes(logger)
    register_all(container, logger)

    logger.debug("Application ready", extra=container.infrastructure.config_service().summary())
    return container
