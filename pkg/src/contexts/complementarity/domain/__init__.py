"""
Complementarity Domain Layer.

Cone complementarity problems solved by projection fixed-point iteration.
"""

from .errors import NCPErrorCode, register_ncp_error_codes
from .exceptions import MalformedProblemException, NumericalBlowupException
from .services import estimate_step, residuals, solve
from .value_objects import (
    AffineMap,
    NCPDiagnostics,
    NCPProblem,
    NCPSolution,
    ProblemSpec,
    parse_problem,
)

__all__ = [
    "NCPErrorCode",
    "register_ncp_error_codes",
    "MalformedProblemException",
    "NumericalBlowupException",
    "estimate_step",
    "residuals",
    "solve",
    "AffineMap",
    "NCPDiagnostics",
    "NCPProblem",
    "NCPSolution",
    "ProblemSpec",
    "parse_problem",
]
