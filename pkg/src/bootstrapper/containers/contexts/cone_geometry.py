"""
Cone Geometry DI Container - Composition Root.

Handler types come from ConeGeometryComposition; this container only decides
what each handler is built with.
"""

from typing import Any

from dependency_injector import containers, providers

from contexts.cone_geometry.composition import ConeGeometryComposition
from contexts.cone_geometry.domain.value_objects import Tolerance

from ._helpers import get_handler

_query_handlers = ConeGeometryComposition.QUERY_HANDLERS


class ConeGeometryContainer(containers.DeclarativeContainer):
    # =========================================================================
    # Dependencies (injected from ApplicationContainer)
    # =========================================================================
    config_service: Any = providers.Dependency()
    logger: Any = providers.Dependency()

    default_tolerance = providers.Singleton(
        Tolerance.from_config,
        numerics=config_service.provided.numerics,
    )

    # =========================================================================
    # Query Handlers (types from Composition)
    # =========================================================================
    project_handler = providers.Factory(
        get_handler(_query_handlers, "ProjectQuery"),
        logger=logger,
        default_tolerance=default_tolerance,
    )

    decompose_handler = providers.Factory(
        get_handler(_query_handlers, "DecomposeQuery"),
        logger=logger,
        default_tolerance=default_tolerance,
    )

    lattice_operation_handler = providers.Factory(
        get_handler(_query_handlers, "LatticeOperationQuery"),
        logger=logger,
        default_tolerance=default_tolerance,
    )

    dual_cone_handler = providers.Factory(
        get_handler(_query_handlers, "DualConeQuery"),
        logger=logger,
    )

    membership_handler = providers.Factory(
        get_handler(_query_handlers, "MembershipQuery"),
        logger=logger,
        default_tolerance=default_tolerance,
    )

    leq_handler = providers.Factory(
        get_handler(_query_handlers, "LeqQuery"),
        logger=logger,
        default_tolerance=default_tolerance,
    )

    catalog_handler = providers.Factory(
        get_handler(_query_handlers, "CatalogQuery"),
        logger=logger,
    )
