"""
Project Query and Handler.

Computes the metric projection of a vector onto a cone.
"""

from typing import List, Optional

from shared.application.base_query import Query, QueryHandler
from shared.application.ports.logger import ILogger
from shared.domain.result import Result
from shared.errors.exceptions import DomainException

from ...domain.services import project
from ...domain.value_objects import ConeDescriptor, Tolerance
from ..read_models import ProjectionReadModel


class ProjectQuery(Query):
    """
    Attributes:
        cone: Target cone
        x: Point to project
        tolerance: Overrides the configured tolerance when given
    """

    cone: ConeDescriptor
    x: List[float]
    tolerance: Optional[Tolerance] = None


class ProjectHandler(QueryHandler[ProjectQuery, ProjectionReadModel]):
    def __init__(self, logger: ILogger, default_tolerance: Tolerance):
        self._logger = logger
        self._default_tolerance = default_tolerance

    async def handle(self, query: ProjectQuery) -> Result[ProjectionReadModel]:
        tol = query.tolerance or self._default_tolerance
        try:
            outcome = project(query.x, query.cone, tol)
        except DomainException as e:
            self._logger.warning("Projection failed", extra={"code": e.error_code})
            return Result.from_exception(e)

        self._logger.debug(
            "Projection computed",
            extra={
                "cone": query.cone.type,
                "method": outcome.method.value,
                "iterations": outcome.iterations,
                "residual": outcome.residual,
            },
        )
        return Result.ok(ProjectionReadModel.from_domain(query.cone, outcome))
