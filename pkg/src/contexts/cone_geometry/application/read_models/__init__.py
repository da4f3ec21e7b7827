"""Cone Geometry read models (report shapes)."""

from .cone_read_models import (
    CatalogEntryReadModel,
    CatalogReadModel,
    DecompositionReadModel,
    DualReadModel,
    LatticeReadModel,
    LeqReadModel,
    MembershipReadModel,
    ProjectionReadModel,
)

__all__ = [
    "CatalogEntryReadModel",
    "CatalogReadModel",
    "DecompositionReadModel",
    "DualReadModel",
    "LatticeReadModel",
    "LeqReadModel",
    "MembershipReadModel",
    "ProjectionReadModel",
]
