"""
Context registrations.

Each context module exports register_all() and register_error_codes().
"""

from . import complementarity, cone_geometry, order_properties

__all__ = [
    "complementarity",
    "cone_geometry",
    "order_properties",
]
