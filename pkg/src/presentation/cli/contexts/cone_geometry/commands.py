"""
Cone Geometry CLI Commands.

Registers the geometry subcommands on the parser and maps each command to
its controller method.
"""

import argparse
from typing import Dict, Sequence

from contexts.cone_geometry import OpKind

from ...run_config import Command
from ..types import Route
from .controller import ConeGeometryController

# Create controller instance
controller = ConeGeometryController()

ROUTES: Dict[Command, Route] = {
    Command.PROJECT: controller.project,
    Command.DECOMPOSE: controller.decompose,
    Command.LATTICE: controller.lattice,
    Command.DUAL: controller.dual,
    Command.MEMBERSHIP: controller.membership,
    Command.LEQ: controller.leq,
    Command.CATALOG: controller.catalog,
}


def _cone_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--cone", help="cone descriptor as inline JSON")


def _point_flags(parser: argparse.ArgumentParser, pair: bool = False) -> None:
    _cone_flag(parser)
    parser.add_argument("--x", help="point as a JSON array")
    if pair:
        parser.add_argument("--y", help="second point as a JSON array")


def register_commands(
    subparsers: "argparse._SubParsersAction", parents: Sequence[argparse.ArgumentParser]
) -> Dict[Command, Route]:
    """Add the geometry subcommands and return their routes."""
    _point_flags(
        subparsers.add_parser(
            Command.PROJECT.value, parents=parents, help="metric projection onto a cone"
        )
    )
    _point_flags(
        subparsers.add_parser(
            Command.DECOMPOSE.value,
            parents=parents,
            help="Moreau decomposition into cone and polar parts",
        )
    )

    lattice = subparsers.add_parser(
        Command.LATTICE.value, parents=parents, help="lattice-like operation of two points"
    )
    lattice.add_argument("--op", choices=[kind.value for kind in OpKind])
    _point_flags(lattice, pair=True)

    _cone_flag(
        subparsers.add_parser(
            Command.DUAL.value, parents=parents, help="symbolic dual of a cone descriptor"
        )
    )
    _point_flags(
        subparsers.add_parser(
            Command.MEMBERSHIP.value, parents=parents, help="membership test and distance"
        )
    )
    _point_flags(
        subparsers.add_parser(
            Command.LEQ.value, parents=parents, help="pre-order test x <=_K y"
        ),
        pair=True,
    )
    subparsers.add_parser(
        Command.CATALOG.value, parents=parents, help="descriptor variants and their JSON schemas"
    )
    return dict(ROUTES)
