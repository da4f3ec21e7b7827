"""
Bounded Contexts.

Each context is a self-contained module with:
- domain/ - Value objects, services, error codes and exceptions
- application/ - Queries, handlers and read models
- composition.py - Handler registrations for the query bus

cone_geometry is the shared kernel: the other two contexts import its
descriptors, tolerances and projections directly.

Usage:
──────
from contexts.cone_geometry import ProjectQuery, parse_cone
from contexts.order_properties import CheckDualityQuery
from contexts.complementarity import SolveNCPQuery
"""
