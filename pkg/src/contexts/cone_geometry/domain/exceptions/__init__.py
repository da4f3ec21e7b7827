"""Cone Geometry domain exceptions."""

from .cone_exceptions import (
    ConsistencyFailureException,
    DimensionMismatchException,
    MalformedConeException,
    NonConvergenceException,
    NonFiniteVectorException,
)

__all__ = [
    "ConsistencyFailureException",
    "DimensionMismatchException",
    "MalformedConeException",
    "NonConvergenceException",
    "NonFiniteVectorException",
]
