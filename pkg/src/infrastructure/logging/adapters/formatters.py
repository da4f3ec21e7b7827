"""Formatters and the stderr handler used by the standard adapter."""

import logging
import sys
from typing import Any, Dict

from pythonjsonlogger import jsonlogger

TEXT_FORMAT = "%(asctime)s %(levelname)-8s %(name)s: %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

# Attributes every LogRecord has; anything else arrived through ``extra``.
_RECORD_ATTRS = frozenset(vars(logging.makeLogRecord({}))) | {"message", "asctime", "taskName"}

_COLORS = {
    "DEBUG": "\033[36m",
    "INFO": "\033[32m",
    "WARNING": "\033[33m",
    "ERROR": "\033[31m",
    "CRITICAL": "\033[35m",
}
_RESET = "\033[0m"


class StderrHandler(logging.StreamHandler):
    """Writes to whatever ``sys.stderr`` is at emit time (pytest swaps it per test)."""

    def __init__(self) -> None:
        super().__init__(sys.stderr)

    @property  # type: ignore[override]
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value) -> None:
        pass


def extra_fields(record: logging.LogRecord) -> Dict[str, Any]:
    return {k: v for k, v in vars(record).items() if k not in _RECORD_ATTRS}


class TextFormatter(logging.Formatter):
    """``<time> <LEVEL> <logger>: <message> key=value ...``, optionally coloured."""

    def __init__(self, colored: bool = False):
        super().__init__(fmt=TEXT_FORMAT, datefmt=DATE_FORMAT)
        self._colored = colored

    def format(self, record: logging.LogRecord) -> str:
        levelname = record.levelname
        if self._colored and levelname in _COLORS:
            record.levelname = f"{_COLORS[levelname]}{levelname}{_RESET}"
        try:
            line = super().format(record)
        finally:
            record.levelname = levelname

        fields = extra_fields(record)
        if fields:
            line += " " + " ".join(f"{k}={v}" for k, v in sorted(fields.items()))
        return line


def build_json_formatter() -> jsonlogger.JsonFormatter:
    return jsonlogger.JsonFormatter(
        "%(asctime)s %(levelname)s %(name)s %(message)s",
        rename_fields={"asctime": "timestamp", "levelname": "level", "name": "logger"},
    )


def setup_logging(
    logger_name: str,
    level: str = "WARNING",
    format_type: str = "text",
    colored: bool = False,
) -> logging.Logger:
    """Give ``logger_name`` exactly one stderr handler; records do not propagate to root."""
    logger = logging.getLogger(logger_name)
    logger.setLevel(level.upper())
    logger.handlers.clear()
    logger.propagate = False

    handler = StderrHandler()
    if format_type == "json":
        handler.setFormatter(build_json_formatter())
    else:
        handler.setFormatter(TextFormatter(colored=colored))
    logger.addHandler(handler)
    return logger
