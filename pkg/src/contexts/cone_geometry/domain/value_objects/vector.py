"""Vector helpers: 1-D finite float64 arrays of the ambient space."""

from typing import Any, Optional

import numpy as np
import numpy.typing as npt

from ..exceptions.cone_exceptions import DimensionMismatchException, NonFiniteVectorException

Vector = npt.NDArray[np.float64]


def as_vector(values: Any, dim: Optional[int] = None, name: str = "x") -> Vector:
    """
    Validate and convert to a Vector.

    Raises:
        NonFiniteVectorException: non-numeric, NaN or Inf entries
        DimensionMismatchException: not one-dimensional, empty, or length != dim
    """
    try:
        arr = np.asarray(values, dtype=np.float64)
    except (TypeError, ValueError):
        raise NonFiniteVectorException(name, reason="is not a sequence of numbers")

    if arr.ndim != 1 or arr.size == 0:
        raise DimensionMismatchException(name, expected="non-empty 1-D array", actual=list(arr.shape))
    if not np.all(np.isfinite(arr)):
        raise NonFiniteVectorException(name)
    if dim is not None and arr.shape[0] != dim:
        raise DimensionMismatchException(name, expected=dim, actual=int(arr.shape[0]))
    return arr


def norm(x: Vector) -> float:
    return float(np.linalg.norm(x))


def scale_of(x: Vector) -> float:
    """max(1, ‖x‖): the scale relative tolerances are measured against."""
    return max(1.0, norm(x))


def to_list(x: Vector) -> list[float]:
    return [float(v) for v in x]
