"""Settings handed to StructlogLoggerAdapter."""

from dataclasses import dataclass
from typing import TYPE_CHECKING

from config.types import StructlogLoggerConfigType

if TYPE_CHECKING:
    from config.logging import LoggingConfig


@dataclass(frozen=True)
class StructlogLoggerConfig:
    level: str
    json_output: bool
    colored: bool

    @classmethod
    def from_config(cls, logging_config: "LoggingConfig") -> "StructlogLoggerConfig":
        json_output = logging_config.is_json_format
        return cls(
            level=logging_config.LOG_LEVEL,
            json_output=json_output,
            colored=logging_config.LOG_CONSOLE_COLORED and not json_output,
        )

    def to_dict(self) -> StructlogLoggerConfigType:
        return StructlogLoggerConfigType(
            level=self.level,
            json_output=self.json_output,
            colored=self.colored,
        )
