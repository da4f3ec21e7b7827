"""
Order Properties Domain Layer.

Randomized falsifiers for isotonicity, subadditivity and lattice invariance
of cone projections.
"""

from .errors import PropertyErrorCode, register_property_error_codes
from .exceptions import (
    ConeDimensionsDifferException,
    InvalidSamplingException,
    NotFalsifiedException,
)
from .services import (
    check_cross_subadditive,
    check_duality,
    check_invariance,
    check_isotone,
    check_subadditive,
    reverify_witness,
)
from .value_objects import EVIDENCE_NOTE, PropertyKind, PropertyReport, Verdict

__all__ = [
    "PropertyErrorCode",
    "register_property_error_codes",
    "ConeDimensionsDifferException",
    "InvalidSamplingException",
    "NotFalsifiedException",
    "check_cross_subadditive",
    "check_duality",
    "check_invariance",
    "check_isotone",
    "check_subadditive",
    "reverify_witness",
    "EVIDENCE_NOTE",
    "PropertyKind",
    "PropertyReport",
    "Verdict",
]
