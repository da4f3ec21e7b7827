"""Complementarity commands: solve-ncp, residuals."""

from .commands import ROUTES, register_commands
from .controller import ComplementarityController

__all__ = ["ComplementarityController", "ROUTES", "register_commands"]
