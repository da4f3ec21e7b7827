"""
Query dispatch settings.

Property checks over tens of thousands of samples can run for minutes; the
bus times every dispatch and flags the ones past ``BUS_SLOW_QUERY_SECONDS``.
"""

from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from config.types import BusesConfigType


class BusesConfig(BaseSettings):
    """
    Environment Variables:
        BUS_ADAPTER: in_memory (the only dispatcher; queries are CPU-bound and local)
        BUS_SLOW_QUERY_SECONDS: warn when a query takes longer than this (0 disables)
        BUS_LOG_TIMINGS: log elapsed time of every dispatch at debug level
    """

    BUS_ADAPTER: Literal["in_memory"] = Field(default="in_memory")
    BUS_SLOW_QUERY_SECONDS: float = Field(default=30.0, ge=0.0)
    BUS_LOG_TIMINGS: bool = Field(default=True)

    model_config = SettingsConfigDict(
        case_sensitive=True,
        extra="ignore",
    )

    @property
    def warns_on_slow_queries(self) -> bool:
        return self.BUS_SLOW_QUERY_SECONDS > 0

    def to_dict(self) -> BusesConfigType:
        return BusesConfigType(
            adapter=self.BUS_ADAPTER,
            slow_query_seconds=self.BUS_SLOW_QUERY_SECONDS,
            log_timings=self.BUS_LOG_TIMINGS,
        )
