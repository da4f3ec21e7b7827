"""
Cone Geometry Application Layer.

Contains:
- queries/ - Query handlers (projection, decomposition, lattice operations, dual, catalog)
- read_models/ - Report shapes
"""

from .queries import (
    CatalogQuery,
    DecomposeQuery,
    DualConeQuery,
    LatticeOperationQuery,
    LeqQuery,
    MembershipQuery,
    ProjectQuery,
)
from .read_models import (
    CatalogReadModel,
    DecompositionReadModel,
    DualReadModel,
    LatticeReadModel,
    LeqReadModel,
    MembershipReadModel,
    ProjectionReadModel,
)

__all__ = [
    "CatalogQuery",
    "DecomposeQuery",
    "DualConeQuery",
    "LatticeOperationQuery",
    "LeqQuery",
    "MembershipQuery",
    "ProjectQuery",
    "CatalogReadModel",
    "DecompositionReadModel",
    "DualReadModel",
    "LatticeReadModel",
    "LeqReadModel",
    "MembershipReadModel",
    "ProjectionReadModel",
]
