"""
Argument parser of the ``conelab`` command.

Usage errors raise BadRequestException instead of exiting so they reach the
error handler like every other input error.
"""

import argparse
from pathlib import Path
from typing import Dict, NoReturn, Tuple

from shared.errors.exceptions import BadRequestException

from .contexts import CONTEXT_COMMANDS
from .contexts.types import Route
from .run_config import Command

PROG = "conelab"


class CliArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise BadRequestException(f"{self.prog}: {message}", details={"usage": self.format_usage()})


def _common_parent() -> argparse.ArgumentParser:
    """Flags accepted by every command."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--env", help="environment (development, testing, staging, production)")
    parent.add_argument(
        "--input",
        type=Path,
        help="JSON file whose keys mirror the flags; explicit flags take precedence",
    )
    parent.add_argument("--output", type=Path, help="write the report here instead of stdout")
    parent.add_argument("--membership-tol", dest="membership_tol", type=float)
    parent.add_argument("--solver-tol", dest="solver_tol", type=float)
    parent.add_argument("--max-iter", dest="max_iter", type=int)
    parent.add_argument("--workers", type=int, help="worker threads of the check-* commands")
    return parent


def build_parser() -> Tuple[argparse.ArgumentParser, Dict[Command, Route]]:
    """
    Returns:
        The parser and the route of every registered command
    """
    parser = CliArgumentParser(
        prog=PROG,
        description="Metric projections onto convex cones, order-property "
        "falsifiers and a projection solver for cone complementarity problems.",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=CliArgumentParser)
    subparsers.required = True

    parents = [_common_parent()]
    routes: Dict[Command, Route] = {}
    for context in CONTEXT_COMMANDS:
        routes.update(context.register_commands(subparsers, parents))

    missing = set(Command) - set(routes)
    if missing:
        raise RuntimeError(f"Commands without a route: {sorted(c.value for c in missing)}")
    return parser, routes
