"""Base controller with common response methods"""

from typing import Optional

from shared.application.dto import DTO
from shared.domain.result import Result
from shared.errors.error_codes import ExitStatus

from .error_handler import result_error_to_response
from .response import CommandResponse


class BaseController:
    """
    Base controller with common response methods.

    Provides utilities for turning Result Pattern values from the query bus
    into CommandResponses.
    """

    @staticmethod
    def success(report: DTO, status: ExitStatus = ExitStatus.OK) -> CommandResponse:
        return CommandResponse.ok(report.to_report(), status=status)

    @staticmethod
    def from_result(result: Result[DTO], falsified: Optional[bool] = None) -> CommandResponse:
        """
        Convert Result to CommandResponse.

        Args:
            result: Result from a query handler
            falsified: Whether the successful report falsifies a property; when
                None the report's own ``falsified`` attribute is consulted

        Returns:
            Exit 1 for falsified property reports, 0 for other successes and
            the registered status of the error code on failure
        """
        if result.is_failure:
            return BaseController.handle_error(result)

        report = result.value
        if falsified is None:
            falsified = bool(getattr(report, "falsified", False))
        return BaseController.success(
            report, status=ExitStatus.FALSIFIED if falsified else ExitStatus.OK
        )

    @staticmethod
    def handle_error(result: Result) -> CommandResponse:
        """
        Map a failed Result to an error response.

        Error codes map to exit statuses through ErrorCodeRegistry; unknown
        codes are internal errors.

        Example:
            result = await query_bus.dispatch(query)
            if result.is_failure:
                return self.handle_error(result)
        """
        return result_error_to_response(result)
