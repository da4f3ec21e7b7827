"""Order Properties Application Layer."""

from .queries import (
    CheckCrossSubadditiveQuery,
    CheckDualityQuery,
    CheckInvarianceQuery,
    CheckIsotoneQuery,
    CheckSubadditiveQuery,
)
from .read_models import PropertyReportReadModel

__all__ = [
    "CheckCrossSubadditiveQuery",
    "CheckDualityQuery",
    "CheckInvarianceQuery",
    "CheckIsotoneQuery",
    "CheckSubadditiveQuery",
    "PropertyReportReadModel",
]
