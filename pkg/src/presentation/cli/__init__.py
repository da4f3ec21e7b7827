"""
Command-line presentation layer.

``conelab <command> [flags]`` maps every library operation to a query on the
query bus and prints one JSON document.
"""

from .app import run
from .parser import build_parser
from .run_config import Command, RunConfig

__all__ = ["Command", "RunConfig", "build_parser", "run"]
