"""
Shared kernel used by every bounded context.

- domain: Result
- application: Query, QueryHandler, DTO and the ports
- presentation: CommandResponse, BaseController and the error handlers
- errors: exit statuses, error codes and exceptions

Usage:
    from shared import Query, QueryHandler, Result
    from shared.presentation import BaseController, CommandResponse
"""

from .application import DTO, Query, QueryHandler
from .application.ports import IConfigService, ILogger, IQueryBus
from .domain import Result
from .errors import (
    BadRequestException,
    BaseException,
    ConfigurationException,
    DomainException,
    ErrorCode,
    ExitStatus,
    InternalException,
    ValidationException,
)

__all__ = [
    # Domain
    "Result",
    # Application
    "Query",
    "QueryHandler",
    "DTO",
    # Ports
    "IQueryBus",
    "IConfigService",
    "ILogger",
    # Errors
    "ErrorCode",
    "ExitStatus",
    "BaseException",
    "ConfigurationException",
    "DomainException",
    "ValidationException",
    "BadRequestException",
    "InternalException",
]
