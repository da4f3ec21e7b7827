"""
Logging settings shared by both adapters.

Records always go to stderr. The default level is WARNING so that scripted
runs see nothing but the JSON report unless a solver or check misbehaves.
"""

from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from config.types import LoggingConfigType

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class LoggingConfig(BaseSettings):
    """
    Environment Variables:
        LOG_ADAPTER: standard | structlog
        LOG_LEVEL: DEBUG shows per-query timings and solver iteration counts
        LOG_FORMAT: json | text
        LOG_CONSOLE_COLORED: ANSI colours for text output
        LOG_INCLUDE_EXTRA_FIELDS: render bound context (command, seed) and ``extra``
    """

    LOG_ADAPTER: Literal["standard", "structlog"] = "standard"
    LOG_LEVEL: LogLevel = "WARNING"
    LOG_FORMAT: Literal["json", "text"] = "text"
    LOG_CONSOLE_COLORED: bool = False
    LOG_INCLUDE_EXTRA_FIELDS: bool = Field(default=True)

    model_config = SettingsConfigDict(
        case_sensitive=True,
        extra="ignore",
    )

    @field_validator("LOG_LEVEL", mode="before")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        return v.upper() if isinstance(v, str) else v

    @property
    def is_json_format(self) -> bool:
        return self.LOG_FORMAT == "json"

    def to_dict(self) -> LoggingConfigType:
        return LoggingConfigType(
            adapter=self.LOG_ADAPTER,
            level=self.LOG_LEVEL,
            format=self.LOG_FORMAT,
        )
