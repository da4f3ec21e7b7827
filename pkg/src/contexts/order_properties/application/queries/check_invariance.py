"""
Check Invariance Query and Handler.

Applies the four lattice-like operations of K to pairs drawn from a cone C.
"""

from contexts.cone_geometry.domain.value_objects import ConeDescriptor
from shared.application.base_query import QueryHandler
from shared.domain.result import Result

from ...domain.services import check_invariance
from ..read_models import PropertyReportReadModel
from .base import PropertyCheckHandlerBase, PropertyCheckQuery


class CheckInvarianceQuery(PropertyCheckQuery):
    set_cone: ConeDescriptor
    cone: ConeDescriptor


class CheckInvarianceHandler(
    PropertyCheckHandlerBase, QueryHandler[CheckInvarianceQuery, PropertyReportReadModel]
):
    async def handle(self, query: CheckInvarianceQuery) -> Result[PropertyReportReadModel]:
        return self._run(
            query,
            lambda tol, workers: check_invariance(
                query.set_cone, query.cone, query.samples, query.seed, tol, workers
            ),
        )
