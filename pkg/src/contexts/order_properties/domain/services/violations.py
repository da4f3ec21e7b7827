"""
Per-sample violation measures.

Each function recomputes one sample from explicit inputs, so a witness can be
replayed later at a different tolerance.
"""

from contexts.cone_geometry.domain.services import distance, lattice_op, project
from contexts.cone_geometry.domain.value_objects import (
    ConeDescriptor,
    OpKind,
    Tolerance,
    Vector,
    scale_of,
    to_list,
)

from .runner import SampleOutcome


def _relative_distance(z: Vector, cone: ConeDescriptor, tol: Tolerance) -> tuple[float, float]:
    dist = distance(z, cone, tol)
    return dist, dist / scale_of(z)


def isotone_violation(
    u: Vector,
    k: Vector,
    projection_cone: ConeDescriptor,
    order_cone: ConeDescriptor,
    tol: Tolerance,
) -> SampleOutcome:
    """u <= v with v = u + k; measures how far P_C v - P_C u leaves the order cone."""
    v = u + k
    p_u = project(u, projection_cone, tol).point
    p_v = project(v, projection_cone, tol).point
    difference = p_v - p_u
    dist, violation = _relative_distance(difference, order_cone, tol)
    return SampleOutcome(
        violation=violation,
        witness={
            "u": to_list(u),
            "k": to_list(k),
            "v": to_list(v),
            "p_u": to_list(p_u),
            "p_v": to_list(p_v),
            "difference": to_list(difference),
            "distance": dist,
            "violation": violation,
        },
    )


def subadditive_violation(
    u: Vector,
    v: Vector,
    projection_cone: ConeDescriptor,
    order_cone: ConeDescriptor,
    tol: Tolerance,
) -> SampleOutcome:
    """Measures how far P_C u + P_C v - P_C(u + v) leaves the order cone."""
    p_u = project(u, projection_cone, tol).point
    p_v = project(v, projection_cone, tol).point
    p_sum = project(u + v, projection_cone, tol).point
    difference = p_u + p_v - p_sum
    dist, violation = _relative_distance(difference, order_cone, tol)
    return SampleOutcome(
        violation=violation,
        witness={
            "u": to_list(u),
            "v": to_list(v),
            "p_u": to_list(p_u),
            "p_v": to_list(p_v),
            "p_sum": to_list(p_sum),
            "difference": to_list(difference),
            "distance": dist,
            "violation": violation,
        },
    )


def lattice_violation(
    x: Vector,
    y: Vector,
    op: OpKind,
    set_cone: ConeDescriptor,
    cone: ConeDescriptor,
    tol: Tolerance,
) -> SampleOutcome:
    """
    Measures how far ``op`` applied with ``cone`` moves the pair out of ``set_cone``.

    The distance is relative to the largest of x, y and the result, since a
    meet or join can cancel its operands down to a short vector.
    """
    result = lattice_op(op, x, y, cone, tol)
    dist = distance(result, set_cone, tol)
    violation = dist / max(scale_of(x), scale_of(y), scale_of(result))
    return SampleOutcome(
        violation=violation,
        witness={
            "x": to_list(x),
            "y": to_list(y),
            "op": OpKind(op).value,
            "result": to_list(result),
            "distance": dist,
            "violation": violation,
        },
    )


def invariance_violation(
    x: Vector,
    y: Vector,
    set_cone: ConeDescriptor,
    cone: ConeDescriptor,
    tol: Tolerance,
) -> SampleOutcome:
    """Worst of the four lattice-like operations; ties keep the first kind."""
    worst = None
    for op in OpKind:
        outcome = lattice_violation(x, y, op, set_cone, cone, tol)
        if worst is None or outcome.violation > worst.violation:
            worst = outcome
    assert worst is not None
    return worst
