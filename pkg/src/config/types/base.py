from typing import Literal, TypedDict


class BaseConfigType(TypedDict):
    environment: Literal["development", "testing", "staging", "production"]
    debug: bool
    app_name: str
    app_version: str
