"""Projection outcome with solver diagnostics."""

from dataclasses import dataclass
from enum import Enum

from .vector import Vector


class ProjectionMethod(str, Enum):
    CLOSED_FORM = "closed_form"
    PAVA = "pava"
    NNLS_ACTIVE_SET = "nnls_active_set"
    DYKSTRA = "dykstra"
    MOREAU = "moreau"


@dataclass(frozen=True, eq=False)
class ProjectionResult:
    """
    Attributes:
        point: nearest point of the cone
        iterations: 0 for closed-form paths; pool merges for PAVA; active-set
            steps for NNLS; full cycles for Dykstra
        residual: the solver's own stopping metric (<= solver_tol on success)
        method: the path that produced ``point``
    """

    point: Vector
    iterations: int
    residual: float
    method: ProjectionMethod


@dataclass(frozen=True, eq=False)
class MoreauDecomposition:
    """x = p - q with p = P_K x, q = P_{K*}(-x) and ⟨p, q⟩ = 0."""

    p: Vector
    q: Vector
    reconstruction_error: float
    cross_term: float
