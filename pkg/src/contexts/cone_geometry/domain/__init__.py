"""
Cone Geometry Domain Layer.

Contains:
- value_objects/ - Cone descriptors, tolerances, vectors, projection results
- algorithms/ - PAVA, Lorentz closed form, NNLS active set, Dykstra
- services/ - dual, membership, projection, Moreau decomposition, lattice operations
- errors/ - Context error codes
- exceptions/ - Context exceptions
"""

from .errors import ConeErrorCode, register_cone_error_codes
from .exceptions import (
    ConsistencyFailureException,
    DimensionMismatchException,
    MalformedConeException,
    NonConvergenceException,
    NonFiniteVectorException,
)
from .services import (
    distance,
    dual,
    is_self_dual,
    lattice_op,
    leq,
    membership,
    moreau_decompose,
    polyhedral_form,
    project,
    project_translated,
    relative_violation,
)
from .value_objects import (
    DEFAULT_TOLERANCE,
    ConeDescriptor,
    Direction,
    Dual,
    FinitelyGenerated,
    HalfspaceIntersection,
    Lorentz,
    Monotone,
    MonotoneNonneg,
    MoreauDecomposition,
    OpKind,
    Orthant,
    ProjectionMethod,
    ProjectionResult,
    Sign,
    Tolerance,
    Vector,
    as_vector,
    dump_cone,
    parse_cone,
)

__all__ = [
    # Errors
    "ConeErrorCode",
    "register_cone_error_codes",
    # Exceptions
    "ConsistencyFailureException",
    "DimensionMismatchException",
    "MalformedConeException",
    "NonConvergenceException",
    "NonFiniteVectorException",
    # Services
    "distance",
    "dual",
    "is_self_dual",
    "lattice_op",
    "leq",
    "membership",
    "moreau_decompose",
    "polyhedral_form",
    "project",
    "project_translated",
    "relative_violation",
    # Value Objects
    "DEFAULT_TOLERANCE",
    "ConeDescriptor",
    "Direction",
    "Dual",
    "FinitelyGenerated",
    "HalfspaceIntersection",
    "Lorentz",
    "Monotone",
    "MonotoneNonneg",
    "MoreauDecomposition",
    "OpKind",
    "Orthant",
    "ProjectionMethod",
    "ProjectionResult",
    "Sign",
    "Tolerance",
    "Vector",
    "as_vector",
    "dump_cone",
    "parse_cone",
]
