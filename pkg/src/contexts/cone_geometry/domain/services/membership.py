"""Membership and the induced pre-order, both through projection distance."""

from typing import Any

import numpy as np

from ..value_objects.cone_descriptor import ConeDescriptor
from ..value_objects.tolerance import DEFAULT_TOLERANCE, Tolerance
from ..value_objects.vector import as_vector, scale_of
from .projection import project


def distance(x: Any, cone: ConeDescriptor, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """‖x - P_K x‖."""
    x = as_vector(x, cone.dim)
    return float(np.linalg.norm(x - project(x, cone, tol).point))


def relative_violation(x: Any, cone: ConeDescriptor, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """dist(x, K) / max(1, ‖x‖); membership holds iff this is <= membership_tol."""
    x = as_vector(x, cone.dim)
    return distance(x, cone, tol) / scale_of(x)


def membership(x: Any, cone: ConeDescriptor, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    return relative_violation(x, cone, tol) <= tol.membership_tol


def leq(x: Any, y: Any, cone: ConeDescriptor, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """x <=_K y  iff  y - x ∈ K."""
    x = as_vector(x, cone.dim, name="x")
    y = as_vector(y, cone.dim, name="y")
    return membership(y - x, cone, tol)
