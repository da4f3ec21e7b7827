"""
Order Properties Composition Root Exports.

Defines what the context needs for DI wiring.
"""

from typing import Any, Dict, List, Type

from .application.queries import (
    CheckCrossSubadditiveHandler,
    CheckCrossSubadditiveQuery,
    CheckDualityHandler,
    CheckDualityQuery,
    CheckInvarianceHandler,
    CheckInvarianceQuery,
    CheckIsotoneHandler,
    CheckIsotoneQuery,
    CheckSubadditiveHandler,
    CheckSubadditiveQuery,
)


class OrderPropertiesComposition:
    """Composition metadata for the Order Properties bounded context."""

    CONTEXT_NAME = "order_properties"

    QUERY_HANDLERS: Dict[Type, Type[Any]] = {
        CheckIsotoneQuery: CheckIsotoneHandler,
        CheckSubadditiveQuery: CheckSubadditiveHandler,
        CheckCrossSubadditiveQuery: CheckCrossSubadditiveHandler,
        CheckInvarianceQuery: CheckInvarianceHandler,
        CheckDualityQuery: CheckDualityHandler,
    }

    HANDLER_PROVIDERS: Dict[Type, str] = {
        CheckIsotoneHandler: "check_isotone_handler",
        CheckSubadditiveHandler: "check_subadditive_handler",
        CheckCrossSubadditiveHandler: "check_cross_subadditive_handler",
        CheckInvarianceHandler: "check_invariance_handler",
        CheckDualityHandler: "check_duality_handler",
    }

    @classmethod
    def get_handler_provider_name(cls, handler_type: Type) -> str:
        """Get container provider name for a handler type."""
        return cls.HANDLER_PROVIDERS.get(handler_type, "")

    @classmethod
    def get_all_query_types(cls) -> List[Type]:
        """Get all query types for this context."""
        return list(cls.QUERY_HANDLERS.keys())
