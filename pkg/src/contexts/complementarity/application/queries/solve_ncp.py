"""
Solve NCP Query and Handler.

Runs the projection fixed-point iteration on an affine cone complementarity
problem.
"""

from typing import List, Optional

import numpy as np

from contexts.cone_geometry.domain.value_objects import Tolerance
from shared.application.base_query import Query, QueryHandler
from shared.application.ports.logger import ILogger
from shared.domain.result import Result
from shared.errors.exceptions import DomainException

from ...domain.services import solve
from ...domain.value_objects import ProblemSpec
from ..read_models import NCPSolutionReadModel
from .problem_builder import StepOption, build_problem


class SolveNCPQuery(Query):
    """
    Attributes:
        problem: Cone, affine mapping, step and optional starting point
        x0: Overrides problem.x0; the apex when neither is given
        step: Overrides problem.step; a positive float or "auto"
        max_iter: Overrides the configured iteration cap
    """

    problem: ProblemSpec
    x0: Optional[List[float]] = None
    step: Optional[StepOption] = None
    max_iter: Optional[int] = None
    tolerance: Optional[Tolerance] = None


class SolveNCPHandler(QueryHandler[SolveNCPQuery, NCPSolutionReadModel]):
    def __init__(
        self,
        logger: ILogger,
        default_tolerance: Tolerance,
        default_max_iter: int,
        blowup_norm: float,
        power_iteration_steps: int,
    ):
        self._logger = logger
        self._default_tolerance = default_tolerance
        self._default_max_iter = default_max_iter
        self._blowup_norm = blowup_norm
        self._power_iteration_steps = power_iteration_steps

    async def handle(self, query: SolveNCPQuery) -> Result[NCPSolutionReadModel]:
        tol = query.tolerance or self._default_tolerance
        max_iter = query.max_iter or self._default_max_iter
        try:
            problem = build_problem(query.problem, query.step, self._power_iteration_steps)
            x0 = query.x0 if query.x0 is not None else query.problem.x0
            if x0 is None:
                x0 = np.zeros(problem.cone.dim)
            solution = solve(problem, x0, max_iter, tol, self._blowup_norm)
        except DomainException as e:
            self._logger.warning("Complementarity solve failed", extra={"code": e.error_code})
            return Result.from_exception(e)

        log = self._logger.debug if solution.converged else self._logger.warning
        log(
            "Complementarity solve finished",
            extra={
                "iterations": solution.iterations,
                "step": problem.step,
                "converged": solution.converged,
                "fixed_point_residual": solution.diagnostics.fixed_point_residual,
            },
        )
        return Result.ok(NCPSolutionReadModel.from_solution(problem, solution))
