"""Order Properties DI Container - Composition Root."""

from typing import Any

from dependency_injector import containers, providers

from contexts.cone_geometry.domain.value_objects import Tolerance
from contexts.order_properties.composition import OrderPropertiesComposition

from ._helpers import get_handler

_query_handlers = OrderPropertiesComposition.QUERY_HANDLERS


class OrderPropertiesContainer(containers.DeclarativeContainer):
    """
    Every check handler shares the configured tolerance and worker count;
    queries may override both per run.
    """

    config_service: Any = providers.Dependency()
    logger: Any = providers.Dependency()

    default_tolerance = providers.Singleton(
        Tolerance.from_config,
        numerics=config_service.provided.numerics,
    )
    default_workers = config_service.provided.numerics.CHECK_WORKERS

    check_isotone_handler = providers.Factory(
        get_handler(_query_handlers, "CheckIsotoneQuery"),
        logger=logger,
        default_tolerance=default_tolerance,
        default_workers=default_workers,
    )

    check_subadditive_handler = providers.Factory(
        get_handler(_query_handlers, "CheckSubadditiveQuery"),
        logger=logger,
        default_tolerance=default_tolerance,
        default_workers=default_workers,
    )

    check_cross_subadditive_handler = providers.Factory(
        get_handler(_query_handlers, "CheckCrossSubadditiveQuery"),
        logger=logger,
        default_tolerance=default_tolerance,
        default_workers=default_workers,
    )

    check_invariance_handler = providers.Factory(
        get_handler(_query_handlers, "CheckInvarianceQuery"),
        logger=logger,
        default_tolerance=default_tolerance,
        default_workers=default_workers,
    )

    check_duality_handler = providers.Factory(
        get_handler(_query_handlers, "CheckDualityQuery"),
        logger=logger,
        default_tolerance=default_tolerance,
        default_workers=default_workers,
    )
