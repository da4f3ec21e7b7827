"""Complementarity Queries and Query Handlers."""

from .ncp_residuals import NCPResidualsHandler, NCPResidualsQuery
from .solve_ncp import SolveNCPHandler, SolveNCPQuery

__all__ = [
    # Queries
    "NCPResidualsQuery",
    "SolveNCPQuery",
    # Handlers
    "NCPResidualsHandler",
    "SolveNCPHandler",
]
