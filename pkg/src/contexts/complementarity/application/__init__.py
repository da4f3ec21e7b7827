"""Complementarity Application Layer."""

from .queries import NCPResidualsQuery, SolveNCPQuery
from .read_models import NCPDiagnosticsReadModel, NCPSolutionReadModel

__all__ = [
    "NCPResidualsQuery",
    "SolveNCPQuery",
    "NCPDiagnosticsReadModel",
    "NCPSolutionReadModel",
]
