"""Callable shapes shared by the per-context command modules."""

from typing import Awaitable, Callable

from shared.application.ports import IQueryBus
from shared.presentation import CommandResponse

from ..run_config import RunConfig

Route = Callable[[RunConfig, IQueryBus], Awaitable[CommandResponse]]
