"""Wires settings, logging, the query bus and the three contexts' handlers."""

from .app_factory import create_application
from .containers import ApplicationContainer, InfrastructureContainer

__all__ = [
    "create_application",
    "ApplicationContainer",
    "InfrastructureContainer",
]
