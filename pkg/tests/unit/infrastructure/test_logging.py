"""Test the standard logger adapter and its formatters"""

import json
import logging

import pytest

from config import LoggingConfig, StandardLoggerConfig, StructlogLoggerConfig
from infrastructure.logging.adapters.formatters import TextFormatter
from infrastructure.logging.adapters.standard import StandardLoggerAdapter


def make_adapter(name: str, **settings) -> StandardLoggerAdapter:
    config = StandardLoggerConfig.from_config(LoggingConfig(LOG_LEVEL="DEBUG", **settings))
    adapter = StandardLoggerAdapter(config, name)
    adapter.initialize()
    return adapter


@pytest.fixture(autouse=True)
def clean_context():
    yield
    StandardLoggerAdapter(StandardLoggerConfig("DEBUG", "text", False, True)).clear_context()


class TestTextFormatter:
    """Test text rendering of structured fields"""

    def test_extra_fields_follow_message_sorted(self):
        # Arrange
        record = logging.makeLogRecord(
            {"name": "conelab", "levelname": "DEBUG", "msg": "Dykstra converged", "residual": 3e-11, "cycles": 412}
        )

        # Act
        line = TextFormatter().format(record)

        # Assert
        assert line.endswith("Dykstra converged cycles=412 residual=3e-11")

    def test_plain_record(self):
        record = logging.makeLogRecord({"name": "conelab", "levelname": "INFO", "msg": "ready"})

        assert TextFormatter().format(record).endswith("conelab: ready")


class TestStandardLoggerAdapter:
    """Test records reach stderr with context"""

    def test_context_and_extra_on_stderr(self, capsys):
        # Arrange
        adapter = make_adapter("conelab.test_text")

        # Act
        adapter.set_context(command="project")
        adapter.debug("Projection done", extra={"iterations": 4})

        # Assert
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "Projection done" in captured.err
        assert "command=project" in captured.err
        assert "iterations=4" in captured.err

    def test_unbind_keeps_other_fields(self, capsys):
        # Arrange
        adapter = make_adapter("conelab.test_unbind")
        adapter.set_context(command="check-duality", seed=7)

        # Act
        adapter.unbind_context("seed")
        adapter.debug("Check done")

        # Assert
        err = capsys.readouterr().err
        assert "command=check-duality" in err
        assert "seed=" not in err

    def test_json_records(self, capsys):
        adapter = make_adapter("conelab.test_json", LOG_FORMAT="json")

        adapter.warning("Slow query", extra={"query": "CheckDualityQuery"})

        record = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
        assert record["message"] == "Slow query"
        assert record["level"] == "WARNING"
        assert record["logger"] == "conelab.test_json"
        assert record["query"] == "CheckDualityQuery"

    def test_extra_fields_can_be_suppressed(self, capsys):
        adapter = make_adapter("conelab.test_bare", LOG_INCLUDE_EXTRA_FIELDS=False)

        adapter.debug("Projection done", extra={"iterations": 4})

        err = capsys.readouterr().err
        assert "Projection done" in err
        assert "iterations" not in err

    def test_level_filters(self, capsys):
        config = StandardLoggerConfig.from_config(LoggingConfig(LOG_LEVEL="WARNING"))
        adapter = StandardLoggerAdapter(config, "conelab.test_quiet")
        adapter.initialize()

        adapter.debug("hidden")

        assert capsys.readouterr().err == ""

    def test_child_shares_handler(self, capsys):
        adapter = make_adapter("conelab.test_parent")

        child = adapter.get_child("solver")
        child.info("from child")

        assert child.health_check()
        assert "conelab.test_parent.solver: from child" in capsys.readouterr().err


class TestAdapterSettings:
    """Test per-adapter views of LoggingConfig"""

    def test_json_disables_colours(self):
        logging_config = LoggingConfig(LOG_FORMAT="json", LOG_CONSOLE_COLORED=True)

        assert StandardLoggerConfig.from_config(logging_config).console_colored is False
        assert StructlogLoggerConfig.from_config(logging_config).colored is False

    def test_level_is_normalised(self):
        assert LoggingConfig(LOG_LEVEL="debug").LOG_LEVEL == "DEBUG"
