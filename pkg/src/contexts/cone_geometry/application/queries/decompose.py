"""
Decompose Query and Handler.

Splits a vector into its projections onto a cone and the negated dual cone.
"""

from typing import List, Optional

from shared.application.base_query import Query, QueryHandler
from shared.application.ports.logger import ILogger
from shared.domain.result import Result
from shared.errors.exceptions import DomainException

from ...domain.services import dual, moreau_decompose
from ...domain.value_objects import ConeDescriptor, Tolerance
from ..read_models import DecompositionReadModel


class DecomposeQuery(Query):
    cone: ConeDescriptor
    x: List[float]
    tolerance: Optional[Tolerance] = None


class DecomposeHandler(QueryHandler[DecomposeQuery, DecompositionReadModel]):
    """
    Handler for DecomposeQuery.

    A ConsistencyFailure surfaces as a failed Result with an internal-error
    code: it indicates a broken projection routine rather than bad input.
    """

    def __init__(self, logger: ILogger, default_tolerance: Tolerance):
        self._logger = logger
        self._default_tolerance = default_tolerance

    async def handle(self, query: DecomposeQuery) -> Result[DecompositionReadModel]:
        tol = query.tolerance or self._default_tolerance
        try:
            decomposition = moreau_decompose(query.x, query.cone, tol)
        except DomainException as e:
            self._logger.error(
                "Moreau decomposition failed", extra={"code": e.error_code, "details": e.details}
            )
            return Result.from_exception(e)

        self._logger.debug(
            "Moreau decomposition verified",
            extra={
                "reconstruction_error": decomposition.reconstruction_error,
                "cross_term": decomposition.cross_term,
            },
        )
        return Result.ok(
            DecompositionReadModel.from_domain(query.cone, dual(query.cone), decomposition)
        )
