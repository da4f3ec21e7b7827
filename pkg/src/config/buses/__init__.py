"""Query dispatch configuration (adapter choice and slow-query threshold)."""

from .buses import BusesConfig

__all__ = ["BusesConfig"]
