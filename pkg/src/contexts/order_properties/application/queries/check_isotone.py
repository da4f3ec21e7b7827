"""
Check Isotone Query and Handler.

Searches for u <=_K v whose projections onto C are not ordered by K.
"""

from contexts.cone_geometry.domain.value_objects import ConeDescriptor
from shared.application.base_query import QueryHandler
from shared.domain.result import Result

from ...domain.services import check_isotone
from ..read_models import PropertyReportReadModel
from .base import PropertyCheckHandlerBase, PropertyCheckQuery


class CheckIsotoneQuery(PropertyCheckQuery):
    projection_cone: ConeDescriptor
    order_cone: ConeDescriptor


class CheckIsotoneHandler(
    PropertyCheckHandlerBase, QueryHandler[CheckIsotoneQuery, PropertyReportReadModel]
):
    async def handle(self, query: CheckIsotoneQuery) -> Result[PropertyReportReadModel]:
        return self._run(
            query,
            lambda tol, workers: check_isotone(
                query.projection_cone, query.order_cone, query.samples, query.seed, tol, workers
            ),
        )
