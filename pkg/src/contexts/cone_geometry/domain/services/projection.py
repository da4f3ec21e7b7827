"""
Metric projection onto every descriptor variant, Moreau decomposition, and
projection onto translated cones.
"""

from typing import Any

import numpy as np

from ..algorithms import (
    project_halfspaces,
    project_lorentz,
    project_monotone,
    project_monotone_nonneg,
    solve_nnls,
)
from ..exceptions.cone_exceptions import ConsistencyFailureException
from ..value_objects.cone_descriptor import (
    ConeDescriptor,
    Dual,
    FinitelyGenerated,
    HalfspaceIntersection,
    Lorentz,
    Monotone,
    MonotoneNonneg,
    Orthant,
)
from ..value_objects.op_kind import Sign
from ..value_objects.projection_result import (
    MoreauDecomposition,
    ProjectionMethod,
    ProjectionResult,
)
from ..value_objects.tolerance import DEFAULT_TOLERANCE, Tolerance
from ..value_objects.vector import Vector, as_vector, scale_of
from .duality import dual


def projection_method(cone: ConeDescriptor) -> ProjectionMethod:
    match cone:
        case Orthant() | Lorentz():
            return ProjectionMethod.CLOSED_FORM
        case Monotone() | MonotoneNonneg():
            return ProjectionMethod.PAVA
        case FinitelyGenerated():
            return ProjectionMethod.NNLS_ACTIVE_SET
        case HalfspaceIntersection():
            return ProjectionMethod.DYKSTRA
        case _:
            return ProjectionMethod.MOREAU


def project(x: Any, cone: ConeDescriptor, tol: Tolerance = DEFAULT_TOLERANCE) -> ProjectionResult:
    """
    Nearest point of ``cone`` to ``x``.

    Raises:
        DimensionMismatchException: len(x) != cone.dim
        NonFiniteVectorException: x has NaN/Inf entries
        NonConvergenceException: an iterative path ran out of iterations
    """
    x = as_vector(x, cone.dim)
    method = projection_method(cone)

    if not np.any(x):
        return ProjectionResult(point=np.zeros(cone.dim), iterations=0, residual=0.0, method=method)

    match cone:
        case Orthant():
            return ProjectionResult(np.maximum(x, 0.0), 0, 0.0, method)
        case Lorentz():
            return ProjectionResult(project_lorentz(x), 0, 0.0, method)
        case Monotone(direction=direction):
            point, merges = project_monotone(x, direction)
            return ProjectionResult(point, merges, 0.0, method)
        case MonotoneNonneg(direction=direction):
            point, merges = project_monotone_nonneg(x, direction)
            return ProjectionResult(point, merges, 0.0, method)
        case FinitelyGenerated():
            nnls = solve_nnls(cone.matrix(), x, tol.solver_tol, tol.max_iter)
            return ProjectionResult(nnls.point, nnls.iterations, nnls.residual, method)
        case HalfspaceIntersection():
            solution = project_halfspaces(cone.matrix(), x, tol.solver_tol, tol.max_iter)
            return ProjectionResult(solution.point, solution.cycles, solution.residual, method)
        case Dual(inner=inner):
            # P_{K*}(x) = x + P_K(-x)
            inner_result = project(-x, inner, tol)
            return ProjectionResult(
                x + inner_result.point, inner_result.iterations, inner_result.residual, method
            )

    raise TypeError(f"Unsupported cone descriptor: {type(cone).__name__}")


def moreau_decompose(
    x: Any, cone: ConeDescriptor, tol: Tolerance = DEFAULT_TOLERANCE
) -> MoreauDecomposition:
    """
    p = P_K x and q = P_{K*}(-x), so that x = p - q and ⟨p, q⟩ = 0.

    Both identities are re-verified at 10 · membership_tol.

    Raises:
        ConsistencyFailureException: an identity fails, meaning a projection
            routine is wrong
    """
    x = as_vector(x, cone.dim)
    p = project(x, cone, tol).point
    q = project(-x, dual(cone), tol).point

    reconstruction_error = float(np.linalg.norm(x - (p - q)))
    cross_term = abs(float(p @ q))
    scale = scale_of(x)
    bound = 10.0 * tol.membership_tol

    if reconstruction_error > bound * scale or cross_term > bound * max(1.0, scale**2):
        raise ConsistencyFailureException(reconstruction_error, cross_term, bound)

    return MoreauDecomposition(
        p=p, q=q, reconstruction_error=reconstruction_error, cross_term=cross_term
    )


def project_translated(
    base: Any,
    cone: ConeDescriptor,
    sign: Sign,
    y: Any,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> Vector:
    """
    Projection of y onto base + K (sign +) or base - K (sign -).

    P_{b+K} y = b + P_K(y - b)  and  P_{b-K} y = b - P_K(b - y).
    """
    base = as_vector(base, cone.dim, name="base")
    y = as_vector(y, cone.dim, name="y")
    if Sign(sign) == Sign.PLUS:
        return base + project(y - base, cone, tol).point
    return base - project(base - y, cone, tol).point
