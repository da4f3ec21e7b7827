"""
Check Duality Query and Handler.

Isotonicity of P_K against subadditivity of P_L, L the dual of K. The two
must agree; a falsified duality report points at a numerical defect.
"""

from contexts.cone_geometry.domain.value_objects import ConeDescriptor
from shared.application.base_query import QueryHandler
from shared.domain.result import Result

from ...domain.services import check_duality
from ..read_models import PropertyReportReadModel
from .base import PropertyCheckHandlerBase, PropertyCheckQuery


class CheckDualityQuery(PropertyCheckQuery):
    cone: ConeDescriptor


class CheckDualityHandler(
    PropertyCheckHandlerBase, QueryHandler[CheckDualityQuery, PropertyReportReadModel]
):
    async def handle(self, query: CheckDualityQuery) -> Result[PropertyReportReadModel]:
        return self._run(
            query,
            lambda tol, workers: check_duality(query.cone, query.samples, query.seed, tol, workers),
        )
