"""
Cone Geometry Queries and Query Handlers.

Each query has exactly one handler; handlers convert domain exceptions into
failed Results.
"""

from .catalog import CatalogHandler, CatalogQuery
from .decompose import DecomposeHandler, DecomposeQuery
from .dual_cone import DualConeHandler, DualConeQuery
from .lattice_operation import LatticeOperationHandler, LatticeOperationQuery
from .leq import LeqHandler, LeqQuery
from .membership import MembershipHandler, MembershipQuery
from .project import ProjectHandler, ProjectQuery

__all__ = [
    # Queries
    "CatalogQuery",
    "DecomposeQuery",
    "DualConeQuery",
    "LatticeOperationQuery",
    "LeqQuery",
    "MembershipQuery",
    "ProjectQuery",
    # Handlers
    "CatalogHandler",
    "DecomposeHandler",
    "DualConeHandler",
    "LatticeOperationHandler",
    "LeqHandler",
    "MembershipHandler",
    "ProjectHandler",
]
