"""
Dykstra's cyclic projection algorithm over halfspaces {x : ⟨a_i, x⟩ >= 0}.
"""

from dataclasses import dataclass

import numpy as np

from ..exceptions.cone_exceptions import NonConvergenceException
from ..value_objects.vector import Vector


@dataclass(frozen=True, eq=False)
class DykstraSolution:
    point: Vector
    cycles: int
    residual: float


def project_halfspaces(A: np.ndarray, x: Vector, solver_tol: float, max_iter: int) -> DykstraSolution:
    """
    Project x onto the intersection of the halfspaces with normals the rows of A.

    Stops when the largest per-halfspace movement over one full cycle, divided
    by max(1, ‖x‖), is <= solver_tol.

    Raises:
        NonConvergenceException: ``max_iter`` cycles without meeting the criterion
    """
    norms_sq = np.einsum("ij,ij->i", A, A)
    scale = max(1.0, float(np.linalg.norm(x)))

    y = x.copy()
    increments = np.zeros_like(A)
    residual = np.inf

    for cycle in range(1, max_iter + 1):
        movement = 0.0
        for i in range(A.shape[0]):
            z = y + increments[i]
            slack = float(A[i] @ z)
            projected = z - (slack / norms_sq[i]) * A[i] if slack < 0.0 else z
            increments[i] = z - projected
            movement = max(movement, float(np.linalg.norm(projected - y)))
            y = projected

        residual = movement / scale
        if residual <= solver_tol:
            return DykstraSolution(point=y, cycles=cycle, residual=residual)

    raise NonConvergenceException("dykstra", max_iter, float(residual))
