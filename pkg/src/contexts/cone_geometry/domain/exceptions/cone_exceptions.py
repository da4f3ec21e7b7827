"""Cone-specific domain exceptions"""

from typing import Any, Optional

from shared.errors.error_codes import ExitStatus
from shared.errors.exceptions import DomainException

from ..errors.cone_error_codes import ConeErrorCode


class DimensionMismatchException(DomainException):
    """A vector or descriptor does not have the expected dimension"""

    def __init__(self, name: str, expected: Any, actual: Any):
        super().__init__(
            message=f"Dimension mismatch for '{name}': expected {expected}, got {actual}",
            details={"name": name, "expected": expected, "actual": actual},
            error_code=ConeErrorCode.DIMENSION_MISMATCH.value,
        )


class NonFiniteVectorException(DomainException):
    """A vector has NaN/Inf or non-numeric entries"""

    def __init__(self, name: str, reason: str = "contains NaN or Inf"):
        super().__init__(
            message=f"Vector '{name}' {reason}",
            details={"name": name},
            error_code=ConeErrorCode.NON_FINITE_VECTOR.value,
        )


class MalformedConeException(DomainException):
    """Cone descriptor failed schema or well-formedness validation"""

    def __init__(self, message: str, errors: Optional[Any] = None):
        super().__init__(
            message=message,
            details={"errors": errors} if errors is not None else {},
            error_code=ConeErrorCode.MALFORMED_CONE.value,
        )


class NonConvergenceException(DomainException):
    """Iterative projection exceeded max_iter with residual above solver_tol"""

    def __init__(self, method: str, iterations: int, residual: float):
        super().__init__(
            message=(
                f"{method} did not converge after {iterations} iterations "
                f"(residual {residual:.3e})"
            ),
            details={"method": method, "iterations": iterations, "residual": residual},
            error_code=ConeErrorCode.NON_CONVERGENCE.value,
            exit_status=ExitStatus.SOLVER_FAILURE,
        )


class ConsistencyFailureException(DomainException):
    """Moreau identities violated: a projection routine is broken, not the input"""

    def __init__(self, reconstruction_error: float, cross_term: float, bound: float):
        super().__init__(
            message=(
                "Moreau decomposition inconsistent: "
                f"reconstruction error {reconstruction_error:.3e}, "
                f"cross term {cross_term:.3e}"
            ),
            details={
                "reconstruction_error": reconstruction_error,
                "cross_term": cross_term,
                "bound": bound,
            },
            error_code=ConeErrorCode.CONSISTENCY_FAILURE.value,
            exit_status=ExitStatus.INTERNAL_ERROR,
        )
