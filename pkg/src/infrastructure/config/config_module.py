"""
ConfigModule: loads ``.env`` files for the environment and validates every
settings section into a ConfigService. The DI container owns the singleton.
"""

from typing import Any, Dict, Optional

from pydantic import ValidationError

from config import CONFIG_MAPPING, ConfigName
from config.env_loader import detect_environment, is_env_loaded, load_env_files
from shared.application.ports import IConfigService
from shared.errors import ConfigurationException, flatten_validation_errors

from .config_service import ConfigService


class ConfigModule:
    @staticmethod
    def create_service(environment: Optional[str] = None) -> IConfigService:
        """
        Args:
            environment: ``--env``; wins over the ENVIRONMENT variable

        Raises:
            ConfigurationException: a section rejected its values, e.g.
                CONELAB_MEMBERSHIP_TOL below CONELAB_SOLVER_TOL (exit status 2)
        """
        env = environment or detect_environment()
        if not is_env_loaded():
            load_env_files(env)

        overrides: Dict[ConfigName, Dict[str, Any]] = {ConfigName.BASE: {"ENVIRONMENT": env}}
        configs: Dict[ConfigName, Any] = {}
        for name, config_cls in CONFIG_MAPPING.items():
            try:
                configs[name] = config_cls(**overrides.get(name, {}))
            except ValidationError as e:
                raise ConfigurationException(
                    name.value,
                    flatten_validation_errors(e),
                ) from e
        return ConfigService(configs=configs, environment=env)
