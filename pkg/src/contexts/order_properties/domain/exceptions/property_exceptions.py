"""Order-property domain exceptions"""

from shared.errors.exceptions import DomainException

from ..errors.property_error_codes import PropertyErrorCode


class InvalidSamplingException(DomainException):
    """Seed or sample budget out of range"""

    def __init__(self, seed: int, samples: int):
        super().__init__(
            message=f"Invalid sampling parameters: seed={seed}, samples={samples}",
            details={"seed": seed, "samples": samples},
            error_code=PropertyErrorCode.INVALID_SAMPLING.value,
        )


class ConeDimensionsDifferException(DomainException):
    def __init__(self, first: int, second: int):
        super().__init__(
            message=f"Cones live in different spaces: dim {first} vs dim {second}",
            details={"first": first, "second": second},
            error_code=PropertyErrorCode.CONE_DIMENSIONS_DIFFER.value,
        )


class NotFalsifiedException(DomainException):
    """Re-verification requested for a report without a witness"""

    def __init__(self, property_name: str):
        super().__init__(
            message=f"Report for '{property_name}' is not falsified; there is no witness",
            details={"property": property_name},
            error_code=PropertyErrorCode.NOT_FALSIFIED.value,
        )
