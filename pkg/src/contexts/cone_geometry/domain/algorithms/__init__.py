"""Projection algorithms: closed form, PAVA, active-set NNLS, Dykstra."""

from .dykstra import DykstraSolution, project_halfspaces
from .lorentz import project_lorentz
from .nnls import NNLSSolution, solve_nnls
from .pava import isotonic_nonincreasing, project_monotone, project_monotone_nonneg

__all__ = [
    "DykstraSolution",
    "project_halfspaces",
    "project_lorentz",
    "NNLSSolution",
    "solve_nnls",
    "isotonic_nonincreasing",
    "project_monotone",
    "project_monotone_nonneg",
]
