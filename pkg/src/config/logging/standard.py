"""Settings handed to StandardLoggerAdapter."""

from dataclasses import dataclass
from typing import TYPE_CHECKING

from config.types import StandardLoggerConfigType

if TYPE_CHECKING:
    from config.logging import LoggingConfig


@dataclass(frozen=True)
class StandardLoggerConfig:
    level: str
    format: str
    console_colored: bool
    include_extra_fields: bool

    @classmethod
    def from_config(cls, logging_config: "LoggingConfig") -> "StandardLoggerConfig":
        # ANSI colours would corrupt JSON records
        colored = logging_config.LOG_CONSOLE_COLORED and not logging_config.is_json_format
        return cls(
            level=logging_config.LOG_LEVEL,
            format=logging_config.LOG_FORMAT,
            console_colored=colored,
            include_extra_fields=logging_config.LOG_INCLUDE_EXTRA_FIELDS,
        )

    def to_dict(self) -> StandardLoggerConfigType:
        return StandardLoggerConfigType(
            level=self.level,
            format=self.format,
            console_colored=self.console_colored,
            include_extra_fields=self.include_extra_fields,
        )
