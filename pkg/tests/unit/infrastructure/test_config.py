"""Test settings loading and the ConfigService view"""

import os

import pytest

from config import BusesConfig, NumericsConfig
from config.env_loader import load_env_files, reset_env_state
from infrastructure.config import ConfigModule
from shared.errors import ConfigurationException, ExitStatus


@pytest.fixture
def fresh_env():
    """Forget which .env files were loaded, before and after each test."""
    reset_env_state()
    yield
    reset_env_state()


class TestConfigModule:
    """Test ConfigModule.create_service"""

    def test_explicit_environment_reaches_base_config(self, fresh_env):
        # Act
        service = ConfigModule.create_service("staging")

        # Assert
        assert service.environment == "staging"
        assert service.base.ENVIRONMENT == "staging"

    def test_defaults(self, fresh_env):
        service = ConfigModule.create_service("testing")

        assert service.numerics.MEMBERSHIP_TOL == 1e-8
        assert service.numerics.SOLVER_TOL == 1e-10
        assert service.buses.BUS_ADAPTER == "in_memory"
        assert service.logging.LOG_LEVEL in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}

    def test_numerics_from_environment(self, fresh_env, monkeypatch):
        # Arrange
        monkeypatch.setenv("CONELAB_CHECK_WORKERS", "4")
        monkeypatch.setenv("CONELAB_MEMBERSHIP_TOL", "1e-6")

        # Act
        service = ConfigModule.create_service("testing")

        # Assert
        assert service.numerics.CHECK_WORKERS == 4
        assert service.numerics.MEMBERSHIP_TOL == 1e-6

    def test_inverted_tolerances_are_an_input_error(self, fresh_env, monkeypatch):
        """Test membership tolerance below solver tolerance is rejected with exit 2"""
        # Arrange
        monkeypatch.setenv("CONELAB_MEMBERSHIP_TOL", "1e-12")

        # Act
        with pytest.raises(ConfigurationException) as exc_info:
            ConfigModule.create_service("testing")

        # Assert
        assert exc_info.value.error_code == "CONFIGURATION_ERROR"
        assert exc_info.value.exit_status == ExitStatus.INPUT_ERROR
        assert exc_info.value.details["section"] == "numerics"
        assert exc_info.value.details["errors"]

    def test_unknown_environment_is_rejected(self, fresh_env):
        with pytest.raises(ConfigurationException) as exc_info:
            ConfigModule.create_service("qa")

        assert exc_info.value.details["section"] == "base"


class TestConfigService:
    """Test typed access and the summary"""

    def test_get_by_name(self, fresh_env):
        service = ConfigModule.create_service("testing")

        assert service.get("numerics") is service.numerics
        assert service.get("nope") is None
        assert service.get_dict("numerics")["membership_tol"] == 1e-8

    def test_get_or_throw(self, fresh_env):
        service = ConfigModule.create_service("testing")

        with pytest.raises(ValueError):
            service.get_or_throw("nope")

    def test_summary_has_every_section(self, fresh_env):
        summary = ConfigModule.create_service("testing").summary()

        assert summary["environment"] == "testing"
        assert set(summary) == {"environment", "base", "buses", "logging", "numerics"}
        assert summary["buses"]["slow_query_seconds"] == 30.0


class TestSettingsSections:
    """Test section validation"""

    def test_buses_from_environment(self, monkeypatch):
        monkeypatch.setenv("BUS_SLOW_QUERY_SECONDS", "0")

        config = BusesConfig()

        assert config.BUS_SLOW_QUERY_SECONDS == 0.0
        assert not config.warns_on_slow_queries

    def test_numerics_rejects_zero_workers(self):
        with pytest.raises(ValueError):
            NumericsConfig(CHECK_WORKERS=0)


class TestEnvFiles:
    """Test .env layering"""

    def test_later_files_override(self, fresh_env, tmp_path, monkeypatch):
        # Arrange
        monkeypatch.setenv("CONELAB_ENV_PROBE", "unset")
        (tmp_path / ".env").write_text("CONELAB_ENV_PROBE=base\n")
        (tmp_path / ".env.testing").write_text("CONELAB_ENV_PROBE=testing\n")
        monkeypatch.chdir(tmp_path)

        # Act
        loaded = load_env_files("testing")

        # Assert
        assert loaded == [".env", ".env.testing"]
        assert os.environ["CONELAB_ENV_PROBE"] == "testing"

    def test_loads_once(self, fresh_env, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)

        load_env_files("testing")

        assert load_env_files("testing") == []
