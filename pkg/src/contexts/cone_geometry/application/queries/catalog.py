"""
Catalog Query and Handler.

Lists every descriptor variant with its JSON schema and a round-tripped example.
"""

from shared.application.base_query import Query, QueryHandler
from shared.application.ports.logger import ILogger
from shared.domain.result import Result

from ...domain.services import catalog_entries, round_trips
from ...domain.value_objects import cone_json_schema, dump_cone
from ..read_models import CatalogEntryReadModel, CatalogReadModel


class CatalogQuery(Query):
    pass


class CatalogHandler(QueryHandler[CatalogQuery, CatalogReadModel]):
    def __init__(self, logger: ILogger):
        self._logger = logger

    async def handle(self, query: CatalogQuery) -> Result[CatalogReadModel]:
        variants = [
            CatalogEntryReadModel(
                type=tag,
                schema=schema,
                example=dump_cone(example),
                round_trips=round_trips(example),
            )
            for tag, schema, example in catalog_entries()
        ]
        self._logger.debug("Catalog listed", extra={"variants": len(variants)})
        return Result.ok(CatalogReadModel(variants=variants, descriptor_schema=cone_json_schema()))
