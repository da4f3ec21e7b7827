"""
Process-wide settings: environment name, debug flag and the version string
stamped into debug logs. ``.env`` files are loaded by ConfigModule first.
"""

from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from config.env_loader import detect_environment
from config.types import BaseConfigType

Environment = Literal["development", "testing", "staging", "production"]


class BaseConfig(BaseSettings):
    ENVIRONMENT: Environment = Field(default_factory=detect_environment)
    DEBUG: bool = False
    APP_NAME: str = "conelab"
    APP_VERSION: str = "0.1.0"

    model_config = SettingsConfigDict(case_sensitive=True, extra="ignore")

    @property
    def is_testing(self) -> bool:
        return self.ENVIRONMENT == "testing"

    def to_dict(self) -> BaseConfigType:
        return BaseConfigType(
            environment=self.ENVIRONMENT,
            debug=self.DEBUG,
            app_name=self.APP_NAME,
            app_version=self.APP_VERSION,
        )
