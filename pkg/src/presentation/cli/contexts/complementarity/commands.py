"""Complementarity CLI Commands."""

import argparse
from typing import Dict, Sequence, Union

from ...run_config import Command
from ..types import Route
from .controller import ComplementarityController

# Create controller instance
controller = ComplementarityController()

ROUTES: Dict[Command, Route] = {
    Command.SOLVE_NCP: controller.solve_ncp,
    Command.RESIDUALS: controller.residuals,
}


def step_argument(value: str) -> Union[float, str]:
    """``--step``: a positive float or ``auto``."""
    if value == "auto":
        return value
    try:
        step = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive number or 'auto', got {value!r}")
    if not step > 0:
        raise argparse.ArgumentTypeError(f"step must be positive, got {value}")
    return step


def register_commands(
    subparsers: "argparse._SubParsersAction", parents: Sequence[argparse.ArgumentParser]
) -> Dict[Command, Route]:
    """Add solve-ncp and residuals and return their routes."""
    solve = subparsers.add_parser(
        Command.SOLVE_NCP.value,
        parents=parents,
        help="projection fixed-point iteration for a cone complementarity problem",
    )
    solve.add_argument("--problem", help="problem document as inline JSON")
    solve.add_argument("--step", type=step_argument, help='positive step or "auto"')
    solve.add_argument("--x0", help="starting point as a JSON array")

    residuals = subparsers.add_parser(
        Command.RESIDUALS.value,
        parents=parents,
        help="complementarity diagnostics of a candidate point",
    )
    residuals.add_argument("--problem", help="problem document as inline JSON")
    residuals.add_argument("--step", type=step_argument, help='positive step or "auto"')
    residuals.add_argument("--x", help="candidate point as a JSON array")

    return dict(ROUTES)
