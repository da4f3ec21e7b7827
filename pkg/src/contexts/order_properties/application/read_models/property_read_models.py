"""
Order Properties Read Models.

PropertyReportReadModel is the JSON report of every check-* command.
"""

from typing import Any, Dict, List, Optional

from pydantic import Field

from contexts.cone_geometry.domain.value_objects import dump_cone
from shared.application.dto import DTO

from ...domain.value_objects import PropertyReport, Verdict


class PropertyReportReadModel(DTO):
    """
    {"property", "verdict", "samples", "seed", "max_violation", "witness",
     "projection_cone", "order_cone", "sub_reports", "notes"}

    ``reverified_violation`` is present on falsified reports when the witness
    was replayed at a tighter solver tolerance.
    """

    property: str
    verdict: str
    samples: int = Field(..., ge=1)
    seed: int = Field(..., ge=0)
    max_violation: float
    witness: Optional[Dict[str, Any]] = None
    projection_cone: Dict[str, Any]
    order_cone: Dict[str, Any]
    sub_reports: List["PropertyReportReadModel"] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    reverified_violation: Optional[float] = None

    @property
    def falsified(self) -> bool:
        return self.verdict == Verdict.FALSIFIED.value

    @classmethod
    def from_domain(
        cls, report: PropertyReport, reverified_violation: Optional[float] = None
    ) -> "PropertyReportReadModel":
        return cls(
            property=report.property.value,
            verdict=report.verdict.value,
            samples=report.samples,
            seed=report.seed,
            max_violation=report.max_violation,
            witness=report.witness,
            projection_cone=dump_cone(report.projection_cone),
            order_cone=dump_cone(report.order_cone),
            sub_reports=[cls.from_domain(sub) for sub in report.sub_reports],
            notes=list(report.notes),
            reverified_violation=reverified_violation,
        )


PropertyReportReadModel.model_rebuild()
