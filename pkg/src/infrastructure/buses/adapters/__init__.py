"""CQRS Bus Adapters."""

from .in_memory import InMemoryQueryBus

__all__ = ["InMemoryQueryBus"]
