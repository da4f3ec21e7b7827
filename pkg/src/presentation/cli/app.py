"""
CLI application.

One command per process: parse flags, build the container, dispatch the
mapped query and write a single JSON document. The exit status tells shell
scripts what happened (see ExitStatus).
"""

import asyncio
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, TextIO, Tuple

from bootstrapper import create_application
from shared.application.ports import ILogger, IQueryBus
from shared.errors.exceptions import BadRequestException
from shared.presentation import CommandResponse, configure_logger, exception_to_response

from .contexts.types import Route
from .parser import build_parser
from .run_config import Command, RunConfig, load_input_document


async def execute(
    route: Route, config: RunConfig, query_bus: IQueryBus, logger: ILogger
) -> CommandResponse:
    logger.set_context(command=config.command.value)
    try:
        response = await route(config, query_bus)
    finally:
        logger.clear_context()

    logger.debug(
        "Command finished",
        extra={"command": config.command.value, "exit_status": response.exit_code},
    )
    return response


def _prepare(
    argv: Optional[Sequence[str]],
) -> Tuple[Route, RunConfig, IQueryBus, ILogger]:
    parser, routes = build_parser()
    flags: Dict[str, Any] = vars(parser.parse_args(argv))
    command = Command(flags.pop("command"))

    input_path = flags.pop("input", None)
    document = load_input_document(input_path) if input_path is not None else {}

    container = create_application(flags.get("env") or document.get("env"))
    logger = container.infrastructure.logger()
    configure_logger(logger)

    config = RunConfig.from_sources(
        command.value,
        flags,
        document,
        defaults=container.cone_geometry.default_tolerance(),
    )
    return routes[command], config, container.infrastructure.query_bus(), logger


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """
    Run one ``conelab`` command.

    Args:
        argv: Arguments without the program name; ``sys.argv[1:]`` when None
        stdout: Stream for the report when no ``--output`` is given

    Returns:
        The exit status
    """
    stream = stdout if stdout is not None else sys.stdout
    output_path: Optional[Path] = None

    try:
        route, config, query_bus, logger = _prepare(argv)
        output_path = config.output
        response = asyncio.run(execute(route, config, query_bus, logger))
    except Exception as e:
        response = exception_to_response(e)

    try:
        response.write(stream, output_path)
    except OSError as e:
        response = exception_to_response(
            BadRequestException(
                f"Cannot write report: {e.strerror}", details={"path": str(output_path)}
            )
        )
        response.write(stream)
    return response.exit_code
