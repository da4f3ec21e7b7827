"""Verdicts of randomized property checks."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from contexts.cone_geometry.domain.value_objects import ConeDescriptor

EVIDENCE_NOTE = "unfalsified is sampled evidence, not proof"


class PropertyKind(str, Enum):
    ISOTONE = "isotone"
    SUBADDITIVE = "subadditive"
    CROSS_SUBADDITIVE = "cross_subadditive"
    INVARIANCE = "invariance"
    DUALITY = "duality"


class Verdict(str, Enum):
    UNFALSIFIED = "unfalsified"
    FALSIFIED = "falsified"


@dataclass(frozen=True)
class PropertyReport:
    """
    Outcome of one randomized check.

    ``max_violation`` is the largest relative violation dist(z, K) / max(1, ‖z‖)
    over all samples, so a report is falsified exactly when it carries a
    witness and exactly when max_violation exceeds membership_tol.

    ``projection_cone`` is the projector's cone (the tested set for
    invariance), ``order_cone`` the cone inducing the order.
    """

    property: PropertyKind
    verdict: Verdict
    samples: int
    seed: int
    max_violation: float
    witness: Optional[Dict[str, Any]]
    projection_cone: ConeDescriptor
    order_cone: ConeDescriptor
    sub_reports: Tuple["PropertyReport", ...] = ()
    notes: Tuple[str, ...] = field(default=(EVIDENCE_NOTE,))

    @property
    def falsified(self) -> bool:
        return self.verdict == Verdict.FALSIFIED
