"""
Dual Cone Query and Handler.

Symbolic dual of a descriptor; nothing numerical happens here.
"""

from shared.application.base_query import Query, QueryHandler
from shared.application.ports.logger import ILogger
from shared.domain.result import Result

from ...domain.services import dual, is_self_dual, polyhedral_form
from ...domain.value_objects import ConeDescriptor, dump_cone
from ..read_models import DualReadModel


class DualConeQuery(Query):
    cone: ConeDescriptor


class DualConeHandler(QueryHandler[DualConeQuery, DualReadModel]):
    def __init__(self, logger: ILogger):
        self._logger = logger

    async def handle(self, query: DualConeQuery) -> Result[DualReadModel]:
        halfspaces = polyhedral_form(query.cone)
        read_model = DualReadModel(
            cone=dump_cone(query.cone),
            dual=dump_cone(dual(query.cone)),
            self_dual=is_self_dual(query.cone),
            polyhedral_form=dump_cone(halfspaces) if halfspaces is not None else None,
        )
        self._logger.debug("Dual cone built", extra={"cone": query.cone.type})
        return Result.ok(read_model)
