"""
Order Properties Error Codes.
Defines all error codes specific to the Order Properties bounded context.
"""

from enum import Enum

from shared.errors.error_codes import ErrorCodeRegistry, ExitStatus


class PropertyErrorCode(str, Enum):
    """
    Error codes for the Order Properties bounded context.

    Naming convention: PROP_XXX where XXX describes the error.
    """

    INVALID_SAMPLING = "PROP_001"
    CONE_DIMENSIONS_DIFFER = "PROP_002"
    NOT_FALSIFIED = "PROP_003"


def register_property_error_codes() -> None:
    """
    Register Order Properties error codes with the global registry.
    Called during application startup.
    """
    registry = ErrorCodeRegistry()

    registry.register(
        PropertyErrorCode.INVALID_SAMPLING.value,
        ExitStatus.INPUT_ERROR,
        "Seed must be >= 0 and samples >= 1",
    )
    registry.register(
        PropertyErrorCode.CONE_DIMENSIONS_DIFFER.value,
        ExitStatus.INPUT_ERROR,
        "Projection and order cones must share a dimension",
    )
    registry.register(
        PropertyErrorCode.NOT_FALSIFIED.value,
        ExitStatus.INPUT_ERROR,
        "Only falsified reports carry a witness to re-verify",
    )
