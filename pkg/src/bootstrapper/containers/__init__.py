"""Composition root: the only package that imports every layer."""

from .application_container import ApplicationContainer
from .contexts import ComplementarityContainer, ConeGeometryContainer, OrderPropertiesContainer
from .infrastructure_container import InfrastructureContainer

__all__ = [
    "ApplicationContainer",
    "InfrastructureContainer",
    "ComplementarityContainer",
    "ConeGeometryContainer",
    "OrderPropertiesContainer",
]
