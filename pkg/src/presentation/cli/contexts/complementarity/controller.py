"""
Complementarity CLI Controller.

A solve that stops at the iteration cap still writes its solution report,
with exit status 3.
"""

from contexts.complementarity import NCPResidualsQuery, SolveNCPQuery
from shared.application.ports import IQueryBus
from shared.errors.error_codes import ExitStatus
from shared.presentation import BaseController, CommandResponse

from ...run_config import RunConfig
from .schemas import ResidualsRequest, SolveRequest


class ComplementarityController(BaseController):
    async def solve_ncp(self, config: RunConfig, query_bus: IQueryBus) -> CommandResponse:
        request = SolveRequest.model_validate(config.arguments)
        result = await query_bus.dispatch(
            SolveNCPQuery(
                problem=request.problem,
                x0=request.x0,
                step=request.step,
                max_iter=config.max_iter,
                tolerance=config.tolerance_override,
            )
        )
        if result.is_failure:
            return self.handle_error(result)

        solution = result.value
        return self.success(
            solution,
            status=ExitStatus.OK if solution.converged else ExitStatus.SOLVER_FAILURE,
        )

    async def residuals(self, config: RunConfig, query_bus: IQueryBus) -> CommandResponse:
        request = ResidualsRequest.model_validate(config.arguments)
        result = await query_bus.dispatch(
            NCPResidualsQuery(
                problem=request.problem,
                x=request.x,
                step=request.step,
                tolerance=config.tolerance_override,
            )
        )
        return self.from_result(result, falsified=False)
