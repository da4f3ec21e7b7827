"""Cone Geometry value objects."""

from .cone_descriptor import (
    CONE_VARIANTS,
    ConeDescriptor,
    Direction,
    Dual,
    FinitelyGenerated,
    HalfspaceIntersection,
    Lorentz,
    Monotone,
    MonotoneNonneg,
    Orthant,
    cone_json_schema,
    dump_cone,
    parse_cone,
)
from .op_kind import OpKind, Sign
from .projection_result import MoreauDecomposition, ProjectionMethod, ProjectionResult
from .tolerance import DEFAULT_TOLERANCE, Tolerance
from .vector import Vector, as_vector, norm, scale_of, to_list

__all__ = [
    "CONE_VARIANTS",
    "ConeDescriptor",
    "Direction",
    "Dual",
    "FinitelyGenerated",
    "HalfspaceIntersection",
    "Lorentz",
    "Monotone",
    "MonotoneNonneg",
    "Orthant",
    "cone_json_schema",
    "dump_cone",
    "parse_cone",
    "OpKind",
    "Sign",
    "MoreauDecomposition",
    "ProjectionMethod",
    "ProjectionResult",
    "DEFAULT_TOLERANCE",
    "Tolerance",
    "Vector",
    "as_vector",
    "norm",
    "scale_of",
    "to_list",
]
