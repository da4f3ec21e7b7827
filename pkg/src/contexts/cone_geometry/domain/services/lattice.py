"""Lattice-like operations induced by a cone and its dual."""

from typing import Any

from ..value_objects.cone_descriptor import ConeDescriptor
from ..value_objects.op_kind import OpKind, Sign
from ..value_objects.tolerance import DEFAULT_TOLERANCE, Tolerance
from ..value_objects.vector import Vector
from .duality import dual
from .projection import project_translated


def lattice_op(
    kind: OpKind,
    x: Any,
    y: Any,
    cone: ConeDescriptor,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> Vector:
    """
    meet_K = P_{x-K} y, join_K = P_{x+K} y, and the same with L = dual(K).
    """
    match OpKind(kind):
        case OpKind.MEET_K:
            return project_translated(x, cone, Sign.MINUS, y, tol)
        case OpKind.JOIN_K:
            return project_translated(x, cone, Sign.PLUS, y, tol)
        case OpKind.MEET_L:
            return project_translated(x, dual(cone), Sign.MINUS, y, tol)
        case OpKind.JOIN_L:
            return project_translated(x, dual(cone), Sign.PLUS, y, tol)
