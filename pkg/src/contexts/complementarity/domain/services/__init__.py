"""Complementarity domain services."""

from .solver import DEFAULT_BLOWUP_NORM, residuals, solve
from .step_size import DEFAULT_POWER_ITERATION_STEPS, estimate_step

__all__ = [
    "DEFAULT_BLOWUP_NORM",
    "DEFAULT_POWER_ITERATION_STEPS",
    "estimate_step",
    "residuals",
    "solve",
]
