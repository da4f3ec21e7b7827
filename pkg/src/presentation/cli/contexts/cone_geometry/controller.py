"""
Cone Geometry CLI Controller.

Thin: maps validated request schemas to queries and dispatches them on the
query bus. No numerical code lives here.
"""

from contexts.cone_geometry import (
    CatalogQuery,
    DecomposeQuery,
    DualConeQuery,
    LatticeOperationQuery,
    LeqQuery,
    MembershipQuery,
    ProjectQuery,
)
from shared.application.ports import IQueryBus
from shared.presentation import BaseController, CommandResponse

from ...run_config import RunConfig
from .schemas import ConeRequest, LatticeRequest, PairRequest, PointRequest


class ConeGeometryController(BaseController):
    """Commands: project, decompose, lattice, dual, membership, leq, catalog."""

    async def project(self, config: RunConfig, query_bus: IQueryBus) -> CommandResponse:
        request = PointRequest.model_validate(config.arguments)
        result = await query_bus.dispatch(
            ProjectQuery(cone=request.cone, x=request.x, tolerance=config.tolerance_override)
        )
        return self.from_result(result)

    async def decompose(self, config: RunConfig, query_bus: IQueryBus) -> CommandResponse:
        request = PointRequest.model_validate(config.arguments)
        result = await query_bus.dispatch(
            DecomposeQuery(cone=request.cone, x=request.x, tolerance=config.tolerance_override)
        )
        return self.from_result(result)

    async def lattice(self, config: RunConfig, query_bus: IQueryBus) -> CommandResponse:
        request = LatticeRequest.model_validate(config.arguments)
        result = await query_bus.dispatch(
            LatticeOperationQuery(
                op=request.op,
                cone=request.cone,
                x=request.x,
                y=request.y,
                tolerance=config.tolerance_override,
            )
        )
        return self.from_result(result)

    async def dual(self, config: RunConfig, query_bus: IQueryBus) -> CommandResponse:
        request = ConeRequest.model_validate(config.arguments)
        result = await query_bus.dispatch(DualConeQuery(cone=request.cone))
        return self.from_result(result)

    async def membership(self, config: RunConfig, query_bus: IQueryBus) -> CommandResponse:
        request = PointRequest.model_validate(config.arguments)
        result = await query_bus.dispatch(
            MembershipQuery(cone=request.cone, x=request.x, tolerance=config.tolerance_override)
        )
        return self.from_result(result)

    async def leq(self, config: RunConfig, query_bus: IQueryBus) -> CommandResponse:
        request = PairRequest.model_validate(config.arguments)
        result = await query_bus.dispatch(
            LeqQuery(
                cone=request.cone,
                x=request.x,
                y=request.y,
                tolerance=config.tolerance_override,
            )
        )
        return self.from_result(result)

    async def catalog(self, config: RunConfig, query_bus: IQueryBus) -> CommandResponse:
        result = await query_bus.dispatch(CatalogQuery())
        return self.from_result(result)
