"""
Complementarity Error Codes.
Defines all error codes specific to the Complementarity bounded context.
"""

from enum import Enum

from shared.errors.error_codes import ErrorCodeRegistry, ExitStatus


class NCPErrorCode(str, Enum):
    """
    Error codes for the Complementarity bounded context.

    Naming convention: NCP_XXX where XXX describes the error.
    """

    # Input errors (001-009)
    MALFORMED_PROBLEM = "NCP_001"

    # Solver errors (010-019)
    NUMERICAL_BLOWUP = "NCP_010"


def register_ncp_error_codes() -> None:
    """
    Register Complementarity error codes with the global registry.
    Called during application startup.
    """
    registry = ErrorCodeRegistry()

    registry.register(
        NCPErrorCode.MALFORMED_PROBLEM.value,
        ExitStatus.INPUT_ERROR,
        "Malformed complementarity problem",
    )
    registry.register(
        NCPErrorCode.NUMERICAL_BLOWUP.value,
        ExitStatus.SOLVER_FAILURE,
        "Iterate norm exceeded the blow-up bound",
    )
