"""
NCP Residuals Query and Handler.

Diagnostics of a candidate solution without iterating.
"""

from typing import List, Optional

from contexts.cone_geometry.domain.value_objects import Tolerance
from shared.application.base_query import Query, QueryHandler
from shared.application.ports.logger import ILogger
from shared.domain.result import Result
from shared.errors.exceptions import DomainException

from ...domain.services import residuals
from ...domain.value_objects import ProblemSpec
from ..read_models import NCPDiagnosticsReadModel
from .problem_builder import StepOption, build_problem


class NCPResidualsQuery(Query):
    problem: ProblemSpec
    x: List[float]
    step: Optional[StepOption] = None
    tolerance: Optional[Tolerance] = None


class NCPResidualsHandler(QueryHandler[NCPResidualsQuery, NCPDiagnosticsReadModel]):
    def __init__(self, logger: ILogger, default_tolerance: Tolerance, power_iteration_steps: int):
        self._logger = logger
        self._default_tolerance = default_tolerance
        self._power_iteration_steps = power_iteration_steps

    async def handle(self, query: NCPResidualsQuery) -> Result[NCPDiagnosticsReadModel]:
        tol = query.tolerance or self._default_tolerance
        try:
            problem = build_problem(query.problem, query.step, self._power_iteration_steps)
            diagnostics = residuals(query.x, problem, tol)
        except DomainException as e:
            self._logger.warning("Residual evaluation failed", extra={"code": e.error_code})
            return Result.from_exception(e)

        return Result.ok(NCPDiagnosticsReadModel.from_domain(problem, query.x, diagnostics))
