"""Order Properties domain exceptions."""

from .property_exceptions import (
    ConeDimensionsDifferException,
    InvalidSamplingException,
    NotFalsifiedException,
)

__all__ = [
    "ConeDimensionsDifferException",
    "InvalidSamplingException",
    "NotFalsifiedException",
]
