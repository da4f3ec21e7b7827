"""
Cone Geometry Bounded Context.

Cone descriptors, metric projections, Moreau decomposition, the induced
pre-order and the lattice-like operations.

Usage:
──────
from contexts.cone_geometry import ProjectQuery, parse_cone
from contexts.cone_geometry.domain import project, Orthant
"""

from .application.queries import (
    CatalogQuery,
    DecomposeQuery,
    DualConeQuery,
    LatticeOperationQuery,
    LeqQuery,
    MembershipQuery,
    ProjectQuery,
)
from .application.read_models import (
    CatalogReadModel,
    DecompositionReadModel,
    DualReadModel,
    LatticeReadModel,
    LeqReadModel,
    MembershipReadModel,
    ProjectionReadModel,
)
from .composition import ConeGeometryComposition
from .domain import (
    ConeDescriptor,
    ConeErrorCode,
    OpKind,
    Tolerance,
    dump_cone,
    parse_cone,
    register_cone_error_codes,
)

__all__ = [
    # Queries
    "CatalogQuery",
    "DecomposeQuery",
    "DualConeQuery",
    "LatticeOperationQuery",
    "LeqQuery",
    "MembershipQuery",
    "ProjectQuery",
    # Read Models
    "CatalogReadModel",
    "DecompositionReadModel",
    "DualReadModel",
    "LatticeReadModel",
    "LeqReadModel",
    "MembershipReadModel",
    "ProjectionReadModel",
    # Composition
    "ConeGeometryComposition",
    # Domain
    "ConeDescriptor",
    "ConeErrorCode",
    "OpKind",
    "Tolerance",
    "dump_cone",
    "parse_cone",
    "register_cone_error_codes",
]
