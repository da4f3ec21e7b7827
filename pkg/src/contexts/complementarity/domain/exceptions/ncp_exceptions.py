"""Complementarity domain exceptions"""

from typing import Any, Optional

from shared.errors.error_codes import ExitStatus
from shared.errors.exceptions import DomainException

from ..errors.ncp_error_codes import NCPErrorCode


class MalformedProblemException(DomainException):
    """Problem JSON or mapping inconsistent with the cone"""

    def __init__(self, message: str, errors: Optional[Any] = None):
        super().__init__(
            message=message,
            details={"errors": errors} if errors is not None else {},
            error_code=NCPErrorCode.MALFORMED_PROBLEM.value,
        )


class NumericalBlowupException(DomainException):
    """Fixed-point iterate diverged past the norm cap"""

    def __init__(self, iterations: int, iterate_norm: float, bound: float):
        super().__init__(
            message=(
                f"Iterate norm {iterate_norm:.3e} exceeded {bound:.1e} "
                f"after {iterations} iterations"
            ),
            details={"iterations": iterations, "norm": iterate_norm, "bound": bound},
            error_code=NCPErrorCode.NUMERICAL_BLOWUP.value,
            exit_status=ExitStatus.SOLVER_FAILURE,
        )
