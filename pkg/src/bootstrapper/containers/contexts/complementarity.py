"""Complementarity DI Container - Composition Root."""

from typing import Any

from dependency_injector import containers, providers

from contexts.complementarity.composition import ComplementarityComposition
from contexts.cone_geometry.domain.value_objects import Tolerance

from ._helpers import get_handler

_query_handlers = ComplementarityComposition.QUERY_HANDLERS


class ComplementarityContainer(containers.DeclarativeContainer):
    config_service: Any = providers.Dependency()
    logger: Any = providers.Dependency()

    default_tolerance = providers.Singleton(
        Tolerance.from_config,
        numerics=config_service.provided.numerics,
    )

    solve_ncp_handler = providers.Factory(
        get_handler(_query_handlers, "SolveNCPQuery"),
        logger=logger,
        default_tolerance=default_tolerance,
        default_max_iter=config_service.provided.numerics.NCP_MAX_ITER,
        blowup_norm=config_service.provided.numerics.NCP_BLOWUP_NORM,
        power_iteration_steps=config_service.provided.numerics.POWER_ITERATION_STEPS,
    )

    ncp_residuals_handler = providers.Factory(
        get_handler(_query_handlers, "NCPResidualsQuery"),
        logger=logger,
        default_tolerance=default_tolerance,
        power_iteration_steps=config_service.provided.numerics.POWER_ITERATION_STEPS,
    )
