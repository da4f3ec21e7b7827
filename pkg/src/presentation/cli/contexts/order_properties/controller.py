"""
Order Properties CLI Controller.

Falsified reports exit with status 1 so shell scripts can branch on a
numerically violated property.
"""

from typing import Any, Dict

from contexts.order_properties import (
    CheckCrossSubadditiveQuery,
    CheckDualityQuery,
    CheckInvarianceQuery,
    CheckIsotoneQuery,
    CheckSubadditiveQuery,
)
from shared.application.ports import IQueryBus
from shared.presentation import BaseController, CommandResponse

from ...run_config import RunConfig
from .schemas import ConeCheckRequest, InvarianceCheckRequest, PairCheckRequest


class OrderPropertiesController(BaseController):
    @staticmethod
    def _sampling(config: RunConfig) -> Dict[str, Any]:
        return {
            "samples": config.samples,
            "seed": config.seed,
            "tolerance": config.tolerance_override,
            "workers": config.workers,
            "reverify": config.reverify,
        }

    async def check_isotone(self, config: RunConfig, query_bus: IQueryBus) -> CommandResponse:
        request = PairCheckRequest.model_validate(config.arguments)
        result = await query_bus.dispatch(
            CheckIsotoneQuery(
                projection_cone=request.proj_cone,
                order_cone=request.order_cone,
                **self._sampling(config),
            )
        )
        return self.from_result(result)

    async def check_subadditive(self, config: RunConfig, query_bus: IQueryBus) -> CommandResponse:
        request = PairCheckRequest.model_validate(config.arguments)
        result = await query_bus.dispatch(
            CheckSubadditiveQuery(
                projection_cone=request.proj_cone,
                order_cone=request.order_cone,
                **self._sampling(config),
            )
        )
        return self.from_result(result)

    async def check_cross_subadditive(
        self, config: RunConfig, query_bus: IQueryBus
    ) -> CommandResponse:
        request = ConeCheckRequest.model_validate(config.arguments)
        result = await query_bus.dispatch(
            CheckCrossSubadditiveQuery(cone=request.cone, **self._sampling(config))
        )
        return self.from_result(result)

    async def check_invariance(self, config: RunConfig, query_bus: IQueryBus) -> CommandResponse:
        request = InvarianceCheckRequest.model_validate(config.arguments)
        result = await query_bus.dispatch(
            CheckInvarianceQuery(
                set_cone=request.set_cone, cone=request.cone, **self._sampling(config)
            )
        )
        return self.from_result(result)

    async def check_duality(self, config: RunConfig, query_bus: IQueryBus) -> CommandResponse:
        request = ConeCheckRequest.model_validate(config.arguments)
        result = await query_bus.dispatch(
            CheckDualityQuery(cone=request.cone, **self._sampling(config))
        )
        return self.from_result(result)
