"""Order Properties CLI Commands."""

import argparse
from typing import Dict, Sequence

from ...run_config import Command
from ..types import Route
from .controller import OrderPropertiesController

# Create controller instance
controller = OrderPropertiesController()

ROUTES: Dict[Command, Route] = {
    Command.CHECK_ISOTONE: controller.check_isotone,
    Command.CHECK_SUBADDITIVE: controller.check_subadditive,
    Command.CHECK_CROSS_SUBADDITIVE: controller.check_cross_subadditive,
    Command.CHECK_INVARIANCE: controller.check_invariance,
    Command.CHECK_DUALITY: controller.check_duality,
}


def _sampling_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--samples", type=int, help="number of random samples (required)")
    parent.add_argument("--seed", type=int, help="random seed (required)")
    parent.add_argument(
        "--reverify",
        action="store_true",
        default=None,
        help="recompute a falsifying witness at a 10x tighter solver tolerance",
    )
    return parent


def register_commands(
    subparsers: "argparse._SubParsersAction", parents: Sequence[argparse.ArgumentParser]
) -> Dict[Command, Route]:
    """Add the check-* subcommands and return their routes."""
    check_parents = [*parents, _sampling_parent()]

    for command, help_text in (
        (Command.CHECK_ISOTONE, "falsify isotonicity of P_K with respect to <=_L"),
        (Command.CHECK_SUBADDITIVE, "falsify subadditivity of P_K with respect to <=_L"),
    ):
        parser = subparsers.add_parser(command.value, parents=check_parents, help=help_text)
        parser.add_argument("--proj-cone", dest="proj_cone", help="cone K as inline JSON")
        parser.add_argument(
            "--order-cone",
            dest="order_cone",
            help='cone L as inline JSON, or "same" to reuse K',
        )

    for command, help_text in (
        (Command.CHECK_CROSS_SUBADDITIVE, "falsify subadditivity of P_K with respect to <=_K*"),
        (Command.CHECK_DUALITY, "check that K-isotone agrees with K*-subadditive"),
    ):
        parser = subparsers.add_parser(command.value, parents=check_parents, help=help_text)
        parser.add_argument("--cone", help="cone K as inline JSON")

    invariance = subparsers.add_parser(
        Command.CHECK_INVARIANCE.value,
        parents=check_parents,
        help="falsify invariance of a cone under the lattice-like operations",
    )
    invariance.add_argument("--set-cone", dest="set_cone", help="tested cone C as inline JSON")
    invariance.add_argument("--cone", help="cone K of the operations as inline JSON")

    return dict(ROUTES)
