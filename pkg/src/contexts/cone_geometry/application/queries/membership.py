"""
Membership Query and Handler.

Decides x ∈ K by the relative projection distance.
"""

from typing import List, Optional

from shared.application.base_query import Query, QueryHandler
from shared.application.ports.logger import ILogger
from shared.domain.result import Result
from shared.errors.exceptions import DomainException

from ...domain.services import distance
from ...domain.value_objects import ConeDescriptor, Tolerance, as_vector, scale_of, to_list
from ..read_models import MembershipReadModel


class MembershipQuery(Query):
    cone: ConeDescriptor
    x: List[float]
    tolerance: Optional[Tolerance] = None


class MembershipHandler(QueryHandler[MembershipQuery, MembershipReadModel]):
    def __init__(self, logger: ILogger, default_tolerance: Tolerance):
        self._logger = logger
        self._default_tolerance = default_tolerance

    async def handle(self, query: MembershipQuery) -> Result[MembershipReadModel]:
        tol = query.tolerance or self._default_tolerance
        try:
            x = as_vector(query.x, query.cone.dim)
            dist = distance(x, query.cone, tol)
        except DomainException as e:
            self._logger.warning("Membership test failed", extra={"code": e.error_code})
            return Result.from_exception(e)

        relative = dist / scale_of(x)
        return Result.ok(
            MembershipReadModel(
                cone=query.cone.model_dump(mode="json"),
                x=to_list(x),
                member=relative <= tol.membership_tol,
                distance=dist,
                relative_violation=relative,
            )
        )
