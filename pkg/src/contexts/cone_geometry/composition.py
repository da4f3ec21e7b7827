"""
Cone Geometry Composition Root Exports.

Defines what the context needs for DI wiring. The bootstrapper imports from
here instead of knowing internal implementation details.

Usage:
──────
from contexts.cone_geometry.composition import ConeGeometryComposition

for query_type, handler_type in ConeGeometryComposition.QUERY_HANDLERS.items():
    provider = ConeGeometryComposition.get_handler_provider_name(handler_type)
    query_bus.register(query_type, getattr(container, provider)())
"""

from typing import Any, Dict, List, Type

from .application.queries import (
    CatalogHandler,
    CatalogQuery,
    DecomposeHandler,
    DecomposeQuery,
    DualConeHandler,
    DualConeQuery,
    LatticeOperationHandler,
    LatticeOperationQuery,
    LeqHandler,
    LeqQuery,
    MembershipHandler,
    MembershipQuery,
    ProjectHandler,
    ProjectQuery,
)


class ConeGeometryComposition:
    """Composition metadata for the Cone Geometry bounded context."""

    CONTEXT_NAME = "cone_geometry"

    # =========================================================================
    # Query Handlers Mapping
    # Query Type -> Handler Type
    # =========================================================================
    QUERY_HANDLERS: Dict[Type, Type[Any]] = {
        ProjectQuery: ProjectHandler,
        DecomposeQuery: DecomposeHandler,
        LatticeOperationQuery: LatticeOperationHandler,
        DualConeQuery: DualConeHandler,
        MembershipQuery: MembershipHandler,
        LeqQuery: LeqHandler,
        CatalogQuery: CatalogHandler,
    }

    # =========================================================================
    # Handler Provider Names (for container access)
    # =========================================================================
    HANDLER_PROVIDERS: Dict[Type, str] = {
        ProjectHandler: "project_handler",
        DecomposeHandler: "decompose_handler",
        LatticeOperationHandler: "lattice_operation_handler",
        DualConeHandler: "dual_cone_handler",
        MembershipHandler: "membership_handler",
        LeqHandler: "leq_handler",
        CatalogHandler: "catalog_handler",
    }

    @classmethod
    def get_handler_provider_name(cls, handler_type: Type) -> str:
        """Get container provider name for a handler type."""
        return cls.HANDLER_PROVIDERS.get(handler_type, "")

    @classmethod
    def get_all_query_types(cls) -> List[Type]:
        """Get all query types for this context."""
        return list(cls.QUERY_HANDLERS.keys())
