"""
Projection fixed-point iteration x <- P_K(x - αf(x)).

Convergence is empirical: ``converged=False`` after max_iter is a normal
outcome, only divergence past the norm cap raises.
"""

from typing import Any

import numpy as np

from contexts.cone_geometry.domain.services import distance, dual, project
from contexts.cone_geometry.domain.value_objects import (
    DEFAULT_TOLERANCE,
    Tolerance,
    as_vector,
    scale_of,
)

from ..exceptions.ncp_exceptions import NumericalBlowupException
from ..value_objects import NCPDiagnostics, NCPProblem, NCPSolution

DEFAULT_BLOWUP_NORM = 1e12


def residuals(x: Any, problem: NCPProblem, tol: Tolerance = DEFAULT_TOLERANCE) -> NCPDiagnostics:
    """Diagnostics of an arbitrary candidate, without iterating."""
    x = as_vector(x, problem.cone.dim)
    fx = problem.evaluate(x)

    fixed_point = float(np.linalg.norm(x - project(x - problem.step * fx, problem.cone, tol).point))
    gap = abs(float(x @ fx))
    primal = distance(x, problem.cone, tol)
    dual_dist = distance(fx, dual(problem.cone), tol)

    bound = tol.solver_tol * scale_of(x)
    gap_bound = tol.solver_tol * max(1.0, float(np.linalg.norm(x) * np.linalg.norm(fx)))
    converged = (
        fixed_point <= bound and primal <= bound and dual_dist <= bound and gap <= gap_bound
    )
    return NCPDiagnostics(
        fixed_point_residual=fixed_point,
        complementarity_gap=gap,
        primal_dist=primal,
        dual_dist=dual_dist,
        converged=converged,
    )


def solve(
    problem: NCPProblem,
    x0: Any,
    max_iter: int = 100_000,
    tol: Tolerance = DEFAULT_TOLERANCE,
    blowup_norm: float = DEFAULT_BLOWUP_NORM,
) -> NCPSolution:
    """
    Iterate from P_K(x0) until the full convergence predicate holds or
    ``max_iter`` updates were made.

    ``iterations`` counts the updates performed before the returned iterate.
    The full diagnostics are only evaluated once the fixed-point step itself
    is below solver_tol.

    Raises:
        DimensionMismatchException: len(x0) != dim
        NumericalBlowupException: an iterate's norm exceeds ``blowup_norm``
    """
    cone = problem.cone
    x = project(as_vector(x0, cone.dim, name="x0"), cone, tol).point

    for iterations in range(max_iter + 1):
        x_next = project(x - problem.step * problem.evaluate(x), cone, tol).point
        if np.linalg.norm(x - x_next) <= tol.solver_tol * scale_of(x):
            diagnostics = residuals(x, problem, tol)
            if diagnostics.converged:
                return NCPSolution(x=x, iterations=iterations, step=problem.step, diagnostics=diagnostics)
        if iterations == max_iter:
            break

        x = x_next
        iterate_norm = float(np.linalg.norm(x))
        if iterate_norm > blowup_norm:
            raise NumericalBlowupException(iterations + 1, iterate_norm, blowup_norm)

    return NCPSolution(
        x=x, iterations=max_iter, step=problem.step, diagnostics=residuals(x, problem, tol)
    )
