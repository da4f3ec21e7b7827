"""
Lattice Operation Query and Handler.

Applies one of meet_K, join_K, meet_L, join_L to a pair of vectors.
"""

from typing import List, Optional

from shared.application.base_query import Query, QueryHandler
from shared.application.ports.logger import ILogger
from shared.domain.result import Result
from shared.errors.exceptions import DomainException

from ...domain.services import lattice_op
from ...domain.value_objects import ConeDescriptor, OpKind, Tolerance, as_vector
from ..read_models import LatticeReadModel


class LatticeOperationQuery(Query):
    """
    Attributes:
        op: Operation kind; the L-variants use the symbolic dual of ``cone``
        cone: The cone K
        x: Left operand (apex of the translated cone)
        y: Right operand (the projected point)
    """

    op: OpKind
    cone: ConeDescriptor
    x: List[float]
    y: List[float]
    tolerance: Optional[Tolerance] = None


class LatticeOperationHandler(QueryHandler[LatticeOperationQuery, LatticeReadModel]):
    def __init__(self, logger: ILogger, default_tolerance: Tolerance):
        self._logger = logger
        self._default_tolerance = default_tolerance

    async def handle(self, query: LatticeOperationQuery) -> Result[LatticeReadModel]:
        tol = query.tolerance or self._default_tolerance
        try:
            x = as_vector(query.x, query.cone.dim, name="x")
            y = as_vector(query.y, query.cone.dim, name="y")
            result = lattice_op(query.op, x, y, query.cone, tol)
        except DomainException as e:
            self._logger.warning("Lattice operation failed", extra={"code": e.error_code})
            return Result.from_exception(e)

        self._logger.debug("Lattice operation computed", extra={"op": query.op.value})
        return Result.ok(LatticeReadModel.from_domain(query.op.value, query.cone, x, y, result))
