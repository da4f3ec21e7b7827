"""
Cone Geometry Error Codes.
Defines all error codes specific to the Cone Geometry bounded context.
"""

from enum import Enum

from shared.errors.error_codes import ErrorCodeRegistry, ExitStatus


class ConeErrorCode(str, Enum):
    """
    Error codes for the Cone Geometry bounded context.

    Naming convention: CONE_XXX where XXX describes the error.
    """

    # Input errors (001-009)
    DIMENSION_MISMATCH = "CONE_001"
    NON_FINITE_VECTOR = "CONE_002"
    MALFORMED_CONE = "CONE_003"

    # Solver errors (010-019)
    NON_CONVERGENCE = "CONE_010"
    CONSISTENCY_FAILURE = "CONE_011"


def register_cone_error_codes() -> None:
    """
    Register Cone Geometry error codes with the global registry.
    Called during application startup.
    """
    registry = ErrorCodeRegistry()

    registry.register(
        ConeErrorCode.DIMENSION_MISMATCH.value,
        ExitStatus.INPUT_ERROR,
        "Vector and cone dimensions do not match",
    )
    registry.register(
        ConeErrorCode.NON_FINITE_VECTOR.value,
        ExitStatus.INPUT_ERROR,
        "Vector entries must be finite numbers",
    )
    registry.register(
        ConeErrorCode.MALFORMED_CONE.value,
        ExitStatus.INPUT_ERROR,
        "Malformed cone descriptor",
    )

    registry.register(
        ConeErrorCode.NON_CONVERGENCE.value,
        ExitStatus.SOLVER_FAILURE,
        "Iterative projection did not converge",
    )
    registry.register(
        ConeErrorCode.CONSISTENCY_FAILURE.value,
        ExitStatus.INTERNAL_ERROR,
        "Moreau decomposition failed its consistency check",
    )
