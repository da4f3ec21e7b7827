"""
Complementarity Bounded Context.

Cone complementarity problems: find x ∈ K with f(x) ∈ K* and ⟨x, f(x)⟩ = 0.
"""

from .application import (
    NCPDiagnosticsReadModel,
    NCPResidualsQuery,
    NCPSolutionReadModel,
    SolveNCPQuery,
)
from .composition import ComplementarityComposition
from .domain import NCPErrorCode, ProblemSpec, parse_problem, register_ncp_error_codes

__all__ = [
    "NCPDiagnosticsReadModel",
    "NCPResidualsQuery",
    "NCPSolutionReadModel",
    "SolveNCPQuery",
    "ComplementarityComposition",
    "NCPErrorCode",
    "ProblemSpec",
    "parse_problem",
    "register_ncp_error_codes",
]
