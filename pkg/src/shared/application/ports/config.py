"""Configuration port. Implemented by ``infrastructure.config.ConfigService``."""

from typing import TYPE_CHECKING, Any, Dict, Optional, Protocol, Union, runtime_checkable

if TYPE_CHECKING:
    from config import BaseConfig, BusesConfig, LoggingConfig, NumericsConfig
    from config.types import ConfigName


@runtime_checkable
class IConfigService(Protocol):
    """
    Read-only access to the settings sections loaded at startup.

    Handlers never read it directly: containers pull ``numerics`` out once and
    inject the resulting Tolerance and limits.
    """

    def get(self, name: Union[str, "ConfigName"]) -> Any:
        ...

    def get_or_throw(self, name: Union[str, "ConfigName"]) -> Any:
        """Raises ValueError for a section that was never loaded."""
        ...

    def get_dict(self, name: Union[str, "ConfigName"]) -> Optional[Dict[str, Any]]:
        ...

    @property
    def base(self) -> Optional["BaseConfig"]:
        ...

    @property
    def buses(self) -> Optional["BusesConfig"]:
        ...

    @property
    def logging(self) -> Optional["LoggingConfig"]:
        ...

    @property
    def numerics(self) -> Optional["NumericsConfig"]:
        ...

    @property
    def environment(self) -> str:
        ...

    @property
    def is_testing(self) -> bool:
        ...

    def summary(self) -> Dict[str, Any]:
        """Every loaded section as a dict; logged at debug level once the container is built."""
        ...
