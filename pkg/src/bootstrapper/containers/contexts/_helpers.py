"""Lookup of handler types in a context's composition metadata."""

from typing import Any, Dict, Type


def get_handler(handlers: Dict[Type, Type[Any]], name: str) -> Type[Any]:
    """Get handler type from composition by query name."""
    for query_type, handler_type in handlers.items():
        if query_type.__name__ == name:
            return handler_type
    raise KeyError(f"Handler for {name} not found in composition")
