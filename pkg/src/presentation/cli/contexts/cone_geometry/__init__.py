"""Cone geometry commands: project, decompose, lattice, dual, membership, leq, catalog."""

from .commands import ROUTES, register_commands
from .controller import ConeGeometryController

__all__ = ["ConeGeometryController", "ROUTES", "register_commands"]
