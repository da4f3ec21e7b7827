"""Complementarity value objects."""

from .ncp_problem import (
    AffineMap,
    Mapping,
    NCPDiagnostics,
    NCPProblem,
    NCPSolution,
    ProblemSpec,
    parse_problem,
)

__all__ = [
    "AffineMap",
    "Mapping",
    "NCPDiagnostics",
    "NCPProblem",
    "NCPSolution",
    "ProblemSpec",
    "parse_problem",
]
