"""Query bus port. Implemented by ``infrastructure.buses.InMemoryQueryBus``."""

from abc import ABC, abstractmethod
from typing import Any, List, Type

from shared.application.base_query import Query
from shared.domain.result import Result


class IQueryBus(ABC):
    """
    One handler per query type; ``dispatch`` always returns a Result.

    Example:
        bus.register(ProjectQuery, ProjectHandler(logger, tolerance))
        result = await bus.dispatch(ProjectQuery(cone=Orthant(dim=2), x=[3.0, -2.0]))
        result.value.point  # [3.0, 0.0]
    """

    @abstractmethod
    def register(self, query_type: Type[Query], handler: Any) -> None:
        """Raises ValueError when ``query_type`` already has a handler."""
        ...

    @abstractmethod
    async def dispatch(self, query: Query) -> Result[Any]:
        """
        Domain failures come back as failed Results; an unregistered query
        type fails with HANDLER_NOT_FOUND. Only bugs raise.
        """
        ...

    @abstractmethod
    def has_handler(self, query_type: Type[Query]) -> bool:
        ...

    @property
    @abstractmethod
    def registered_queries(self) -> List[Type[Query]]:
        ...
