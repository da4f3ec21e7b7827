"""Numerics configuration type."""

from typing import TypedDict


class NumericsConfigType(TypedDict):
    membership_tol: float
    solver_tol: float
    max_iter: int
    ncp_max_iter: int
    ncp_blowup_norm: float
    check_workers: int
    power_iteration_steps: int
