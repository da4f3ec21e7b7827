"""Step-size safeguard for affine problems."""

import numpy as np

from ..exceptions.ncp_exceptions import MalformedProblemException

DEFAULT_POWER_ITERATION_STEPS = 50


def estimate_step(M: np.ndarray, steps: int = DEFAULT_POWER_ITERATION_STEPS) -> float:
    """
    α = 1/λ with λ the Rayleigh estimate of the largest eigenvalue of M after
    ``steps`` power-iteration steps from the all-ones vector.

    Raises:
        MalformedProblemException: λ is not positive
    """
    M = np.asarray(M, dtype=np.float64)
    v = np.ones(M.shape[0]) / np.sqrt(M.shape[0])
    for _ in range(steps):
        w = M @ v
        w_norm = np.linalg.norm(w)
        if w_norm == 0.0:
            break
        v = w / w_norm

    eigenvalue = float(v @ (M @ v))
    if not np.isfinite(eigenvalue) or eigenvalue <= 0.0:
        raise MalformedProblemException(
            f"Automatic step needs a positive leading eigenvalue, estimated {eigenvalue:.3e}"
        )
    return 1.0 / eigenvalue
