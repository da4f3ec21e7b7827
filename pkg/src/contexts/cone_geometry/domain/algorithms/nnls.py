"""
Active-set nonnegative least squares (Lawson-Hanson).

Solves min_{λ >= 0} ‖Gλ - x‖ for the projection onto the cone generated by
the columns of G.
"""

from dataclasses import dataclass

import numpy as np

from ..exceptions.cone_exceptions import NonConvergenceException
from ..value_objects.vector import Vector


@dataclass(frozen=True, eq=False)
class NNLSSolution:
    coefficients: Vector
    point: Vector
    iterations: int
    residual: float


def _passive_least_squares(G: np.ndarray, x: Vector, passive: np.ndarray) -> Vector:
    s = np.zeros(G.shape[1])
    cols = np.flatnonzero(passive)
    if cols.size:
        solution, *_ = np.linalg.lstsq(G[:, cols], x, rcond=None)
        s[cols] = solution
    return s


def solve_nnls(G: np.ndarray, x: Vector, solver_tol: float, max_iter: int) -> NNLSSolution:
    """
    Lawson-Hanson active set.

    The residual is the largest KKT dual-feasibility violation
    ⟨g_j, x - Gλ⟩ / (‖g_j‖ · max(1, ‖x‖)) over all generators; the solver stops
    once it is <= solver_tol. When several coefficients reach zero in the same
    step, the lowest-index one leaves the passive set first.

    Raises:
        NonConvergenceException: more than ``max_iter`` active-set steps
    """
    m = G.shape[1]
    col_norms = np.linalg.norm(G, axis=0)
    scale = max(1.0, float(np.linalg.norm(x)))

    lam = np.zeros(m)
    passive = np.zeros(m, dtype=bool)
    blocked = np.zeros(m, dtype=bool)
    iterations = 0

    def dual_violation(coef: Vector) -> Vector:
        return (G.T @ (x - G @ coef)) / (col_norms * scale)

    w = dual_violation(lam)
    while True:
        candidates = ~passive & ~blocked
        if not candidates.any() or w[candidates].max() <= solver_tol:
            break
        if iterations >= max_iter:
            raise NonConvergenceException(
                "nnls_active_set", iterations, float(w[candidates].max())
            )
        iterations += 1

        entering = int(np.flatnonzero(candidates)[np.argmax(w[candidates])])
        passive[entering] = True
        s = _passive_least_squares(G, x, passive)
        if s[entering] <= 0.0:
            # rounding kept the column from entering; retry once λ moves
            passive[entering] = False
            blocked[entering] = True
            continue

        while np.any(s[passive] <= 0.0):
            iterations += 1
            if iterations > max_iter:
                raise NonConvergenceException(
                    "nnls_active_set", iterations, float(max(w.max(), 0.0))
                )
            hit = np.flatnonzero(passive & (s <= 0.0))
            current = lam[hit]
            ratios = np.where(current > 0.0, current / np.maximum(current - s[hit], 1e-300), 0.0)
            step = float(ratios.min())
            lam = lam + step * (s - lam)
            leaving = int(hit[np.argmin(ratios)])
            passive[leaving] = False
            lam[leaving] = 0.0
            s = _passive_least_squares(G, x, passive)

        lam = s
        blocked[:] = False
        w = dual_violation(lam)

    residual = float(max(w[~passive].max(initial=0.0), 0.0))
    return NNLSSolution(coefficients=lam, point=G @ lam, iterations=iterations, residual=residual)
