"""
Check Subadditive Query and Handler.

Searches for pairs with P_C u + P_C v - P_C(u + v) outside K.
"""

from contexts.cone_geometry.domain.value_objects import ConeDescriptor
from shared.application.base_query import QueryHandler
from shared.domain.result import Result

from ...domain.services import check_subadditive
from ..read_models import PropertyReportReadModel
from .base import PropertyCheckHandlerBase, PropertyCheckQuery


class CheckSubadditiveQuery(PropertyCheckQuery):
    projection_cone: ConeDescriptor
    order_cone: ConeDescriptor


class CheckSubadditiveHandler(
    PropertyCheckHandlerBase, QueryHandler[CheckSubadditiveQuery, PropertyReportReadModel]
):
    async def handle(self, query: CheckSubadditiveQuery) -> Result[PropertyReportReadModel]:
        return self._run(
            query,
            lambda tol, workers: check_subadditive(
                query.projection_cone, query.order_cone, query.samples, query.seed, tol, workers
            ),
        )
