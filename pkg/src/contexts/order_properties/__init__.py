"""
Order Properties Bounded Context.

Randomized verifiers for K-isotonicity and K-subadditivity of cone
projections, lattice invariance of cones, and the isotone/subadditive
duality check.
"""

from .application import (
    CheckCrossSubadditiveQuery,
    CheckDualityQuery,
    CheckInvarianceQuery,
    CheckIsotoneQuery,
    CheckSubadditiveQuery,
    PropertyReportReadModel,
)
from .composition import OrderPropertiesComposition
from .domain import PropertyErrorCode, register_property_error_codes

__all__ = [
    "CheckCrossSubadditiveQuery",
    "CheckDualityQuery",
    "CheckInvarianceQuery",
    "CheckIsotoneQuery",
    "CheckSubadditiveQuery",
    "PropertyReportReadModel",
    "OrderPropertiesComposition",
    "PropertyErrorCode",
    "register_property_error_codes",
]
