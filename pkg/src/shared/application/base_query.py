"""
Queries and their handlers.

Projections, property checks and complementarity solves never modify state, so
every use case is a query: a frozen pydantic model carrying all of its inputs
(seeds included) and answered by exactly one async handler.
"""

from abc import ABC, abstractmethod
from typing import Generic, TypeVar

from pydantic import BaseModel, ConfigDict

from shared.domain.result import Result

TResult = TypeVar("TResult")
TQuery = TypeVar("TQuery", bound="Query")


class Query(BaseModel, ABC):
    """
    Example:
        class ProjectQuery(Query):
            cone: ConeDescriptor
            x: List[float]
            tolerance: Optional[Tolerance] = None
    """

    model_config = ConfigDict(frozen=True, extra="forbid", arbitrary_types_allowed=True)


class QueryHandler(ABC, Generic[TQuery, TResult]):
    """
    Handlers call domain services, turn expected domain exceptions into failed
    Results and return read models shaped like the JSON report. Anything else
    propagates and ends up as INTERNAL_ERROR.
    """

    @abstractmethod
    async def handle(self, query: TQuery) -> Result[TResult]:
        ...
