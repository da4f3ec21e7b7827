"""
Numerics configuration.

Contains:
- NumericsConfig: tolerances, iteration caps and falsifier workers
"""

from .numerics import NumericsConfig

__all__ = [
    "NumericsConfig",
]
