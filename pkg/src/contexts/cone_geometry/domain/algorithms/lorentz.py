"""Closed-form projection onto the second-order (Lorentz) cone."""

import numpy as np

from ..value_objects.vector import Vector


def project_lorentz(x: Vector) -> Vector:
    """
    Project (u, t) onto {‖u‖ <= t}.

    Cases: interior (‖u‖ < t) returns x, polar interior (‖u‖ < -t) returns 0,
    otherwise the radial formula ((‖u‖ + t) / 2) · (u / ‖u‖, 1). The radial
    branch takes the tie ‖u‖ = |t|, which keeps the map continuous.
    """
    u, t = x[:-1], float(x[-1])
    norm_u = float(np.linalg.norm(u))

    if norm_u >= abs(t):
        if norm_u == 0.0:
            return np.zeros_like(x)
        coef = 0.5 * (norm_u + t)
        out = np.empty_like(x)
        out[:-1] = (coef / norm_u) * u
        out[-1] = coef
        return out
    if t > 0.0:
        return x.copy()
    return np.zeros_like(x)
