"""ConfigService: typed, read-only view over the loaded settings sections."""

from typing import TYPE_CHECKING, Any, Dict, Optional, Union

from config.types import ConfigName
from shared.application.ports import IConfigService

if TYPE_CHECKING:
    from config import BaseConfig, BusesConfig, LoggingConfig, NumericsConfig


class ConfigService(IConfigService):
    """
    Example:
        config_service.numerics.MEMBERSHIP_TOL
        config_service.get("numerics")          # same object
        config_service.get_dict("numerics")     # NumericsConfigType
    """

    def __init__(self, configs: Dict[ConfigName, Any], environment: str):
        self._configs = configs
        self._environment = environment

    def get(self, name: Union[str, ConfigName]) -> Any:
        """Section by name, or None for an unknown name."""
        try:
            return self._configs.get(ConfigName(name))
        except ValueError:
            return None

    def get_or_throw(self, name: Union[str, ConfigName]) -> Any:
        config = self.get(name)
        if config is None:
            raise ValueError(f"Config '{name}' not found")
        return config

    def get_dict(self, name: Union[str, ConfigName]) -> Optional[Dict[str, Any]]:
        config = self.get(name)
        return config.to_dict() if config is not None else None

    @property
    def base(self) -> Optional["BaseConfig"]:
        return self._configs.get(ConfigName.BASE)

    @property
    def buses(self) -> Optional["BusesConfig"]:
        return self._configs.get(ConfigName.BUSES)

    @property
    def logging(self) -> Optional["LoggingConfig"]:
        return self._configs.get(ConfigName.LOGGING)

    @property
    def numerics(self) -> Optional["NumericsConfig"]:
        return self._configs.get(ConfigName.NUMERICS)

    @property
    def environment(self) -> str:
        return self._environment

    @property
    def is_testing(self) -> bool:
        return self._environment == "testing"

    def summary(self) -> Dict[str, Any]:
        """Every loaded section as a dict; logged at debug level once the container is built."""
        summary: Dict[str, Any] = {"environment": self._environment}
        for name in ConfigName:
            section = self.get_dict(name)
            if section is not None:
                summary[name.value] = section
        return summary

    def __repr__(self) -> str:
        return f"ConfigService(environment={self._environment}, configs={[n.value for n in self._configs]})"
