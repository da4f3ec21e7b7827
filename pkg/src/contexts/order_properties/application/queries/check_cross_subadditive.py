"""
Check Cross-Subadditive Query and Handler.

Subadditivity of P_K with respect to the order of the dual cone.
"""

from contexts.cone_geometry.domain.value_objects import ConeDescriptor
from shared.application.base_query import QueryHandler
from shared.domain.result import Result

from ...domain.services import check_cross_subadditive
from ..read_models import PropertyReportReadModel
from .base import PropertyCheckHandlerBase, PropertyCheckQuery


class CheckCrossSubadditiveQuery(PropertyCheckQuery):
    cone: ConeDescriptor


class CheckCrossSubadditiveHandler(
    PropertyCheckHandlerBase, QueryHandler[CheckCrossSubadditiveQuery, PropertyReportReadModel]
):
    async def handle(self, query: CheckCrossSubadditiveQuery) -> Result[PropertyReportReadModel]:
        return self._run(
            query,
            lambda tol, workers: check_cross_subadditive(
                query.cone, query.samples, query.seed, tol, workers
            ),
        )
