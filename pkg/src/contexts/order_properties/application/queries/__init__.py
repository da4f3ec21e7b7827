"""Order Properties Queries and Query Handlers."""

from .base import PropertyCheckQuery
from .check_cross_subadditive import CheckCrossSubadditiveHandler, CheckCrossSubadditiveQuery
from .check_duality import CheckDualityHandler, CheckDualityQuery
from .check_invariance import CheckInvarianceHandler, CheckInvarianceQuery
from .check_isotone import CheckIsotoneHandler, CheckIsotoneQuery
from .check_subadditive import CheckSubadditiveHandler, CheckSubadditiveQuery

__all__ = [
    # Queries
    "PropertyCheckQuery",
    "CheckCrossSubadditiveQuery",
    "CheckDualityQuery",
    "CheckInvarianceQuery",
    "CheckIsotoneQuery",
    "CheckSubadditiveQuery",
    # Handlers
    "CheckCrossSubadditiveHandler",
    "CheckDualityHandler",
    "CheckInvarianceHandler",
    "CheckIsotoneHandler",
    "CheckSubadditiveHandler",
]
