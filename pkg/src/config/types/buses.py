"""Query dispatch configuration types."""

from enum import Enum
from typing import Literal, TypedDict


class BusAdapterType(str, Enum):
    IN_MEMORY = "in_memory"


class BusesConfigType(TypedDict):
    adapter: Literal["in_memory"]
    slow_query_seconds: float
    log_timings: bool
