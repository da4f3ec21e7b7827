"""
In-process query dispatch.

Every conelab computation is a query handled in the calling process. The bus
keeps one handler per query type and times each dispatch, since a property
check's cost grows with its sample count.
"""

import time
from typing import TYPE_CHECKING, Any, Dict, List, Optional, Type

from shared.application.base_query import Query
from shared.application.ports.query_bus import IQueryBus
from shared.domain.result import Result
from shared.errors import ErrorCode

if TYPE_CHECKING:
    from shared.application.ports import ILogger


class InMemoryQueryBus(IQueryBus):
    """
    Args:
        logger: optional logger; the bus is silent without one
        slow_query_seconds: dispatches slower than this log a warning (0 disables)
        log_timings: log every dispatch's elapsed time at debug level
    """

    def __init__(
        self,
        logger: Optional["ILogger"] = None,
        slow_query_seconds: float = 0.0,
        log_timings: bool = False,
    ):
        self._handlers: Dict[Type[Query], Any] = {}
        self._logger = logger
        self._slow_query_seconds = slow_query_seconds
        self._log_timings = log_timings

    def register(self, query_type: Type[Query], handler: Any) -> None:
        if query_type in self._handlers:
            raise ValueError(
                f"{query_type.__name__} is already handled by "
                f"{self._handlers[query_type].__class__.__name__}"
            )
        self._handlers[query_type] = handler

    async def dispatch(self, query: Query) -> Result[Any]:
        """
        Run the handler for ``query``.

        An unregistered query type yields a failed Result with
        HANDLER_NOT_FOUND, which the CLI reports as an internal error.
        """
        query_type = type(query)
        handler = self._handlers.get(query_type)
        if handler is None:
            message = f"No handler registered for {query_type.__name__}"
            if self._logger:
                self._logger.error(message)
            return Result.fail(ErrorCode.HANDLER_NOT_FOUND.value, message)

        started = time.perf_counter()
        result = await handler.handle(query)
        elapsed = time.perf_counter() - started

        self._report_timing(query_type.__name__, elapsed, result)
        return result

    def _report_timing(self, query_name: str, elapsed: float, result: Result[Any]) -> None:
        if not self._logger:
            return
        extra = {
            "query": query_name,
            "elapsed_s": round(elapsed, 6),
            "outcome": "success" if result.is_success else result.error_code,
        }
        if self._slow_query_seconds > 0 and elapsed > self._slow_query_seconds:
            self._logger.warning("Slow query", extra=extra)
        elif self._log_timings:
            self._logger.debug("Query dispatched", extra=extra)

    def has_handler(self, query_type: Type[Query]) -> bool:
        return query_type in self._handlers

    @property
    def registered_queries(self) -> List[Type[Query]]:
        return list(self._handlers)
