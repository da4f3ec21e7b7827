"""
Complementarity Composition Root Exports.

Defines what the context needs for DI wiring.
"""

from typing import Any, Dict, List, Type

from .application.queries import (
    NCPResidualsHandler,
    NCPResidualsQuery,
    SolveNCPHandler,
    SolveNCPQuery,
)


class ComplementarityComposition:
    """Composition metadata for the Complementarity bounded context."""

    CONTEXT_NAME = "complementarity"

    QUERY_HANDLERS: Dict[Type, Type[Any]] = {
        SolveNCPQuery: SolveNCPHandler,
        NCPResidualsQuery: NCPResidualsHandler,
    }

    HANDLER_PROVIDERS: Dict[Type, str] = {
        SolveNCPHandler: "solve_ncp_handler",
        NCPResidualsHandler: "ncp_residuals_handler",
    }

    @classmethod
    def get_handler_provider_name(cls, handler_type: Type) -> str:
        """Get container provider name for a handler type."""
        return cls.HANDLER_PROVIDERS.get(handler_type, "")

    @classmethod
    def get_all_query_types(cls) -> List[Type]:
        """Get all query types for this context."""
        return list(cls.QUERY_HANDLERS.keys())
