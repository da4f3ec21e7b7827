"""
Leq Query and Handler.

Tests the pre-order x <=_K y, i.e. y - x ∈ K.
"""

from typing import List, Optional

from shared.application.base_query import Query, QueryHandler
from shared.application.ports.logger import ILogger
from shared.domain.result import Result
from shared.errors.exceptions import DomainException

from ...domain.services import distance
from ...domain.value_objects import ConeDescriptor, Tolerance, as_vector, scale_of, to_list
from ..read_models import LeqReadModel


class LeqQuery(Query):
    cone: ConeDescriptor
    x: List[float]
    y: List[float]
    tolerance: Optional[Tolerance] = None


class LeqHandler(QueryHandler[LeqQuery, LeqReadModel]):
    def __init__(self, logger: ILogger, default_tolerance: Tolerance):
        self._logger = logger
        self._default_tolerance = default_tolerance

    async def handle(self, query: LeqQuery) -> Result[LeqReadModel]:
        tol = query.tolerance or self._default_tolerance
        try:
            x = as_vector(query.x, query.cone.dim, name="x")
            y = as_vector(query.y, query.cone.dim, name="y")
            dist = distance(y - x, query.cone, tol)
        except DomainException as e:
            self._logger.warning("Pre-order test failed", extra={"code": e.error_code})
            return Result.from_exception(e)

        return Result.ok(
            LeqReadModel(
                cone=query.cone.model_dump(mode="json"),
                x=to_list(x),
                y=to_list(y),
                leq=dist <= tol.membership_tol * scale_of(y - x),
                distance=dist,
            )
        )
