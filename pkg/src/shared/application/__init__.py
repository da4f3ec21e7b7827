"""Query/handler bases, the read-model base and the ports to infrastructure."""

from .base_query import Query, QueryHandler
from .dto import DTO

__all__ = [
    "Query",
    "QueryHandler",
    "DTO",
]
