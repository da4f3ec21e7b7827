"""
Cone Geometry Read Models.

JSON shapes of the reports written by the project, decompose, lattice, dual,
membership, leq and catalog commands.
"""

from typing import Any, Dict, List, Optional

from pydantic import Field

from shared.application.dto import DTO

from ...domain.value_objects import (
    ConeDescriptor,
    MoreauDecomposition,
    ProjectionResult,
    Vector,
    dump_cone,
    to_list,
)


class ProjectionReadModel(DTO):
    """Projected point with the solver diagnostics."""

    cone: Dict[str, Any]
    point: List[float]
    iterations: int = Field(..., ge=0)
    residual: float = Field(..., ge=0.0)
    method: str

    @classmethod
    def from_domain(cls, cone: ConeDescriptor, result: ProjectionResult) -> "ProjectionReadModel":
        return cls(
            cone=dump_cone(cone),
            point=to_list(result.point),
            iterations=result.iterations,
            residual=result.residual,
            method=result.method.value,
        )


class DecompositionReadModel(DTO):
    """x = p - q, p = P_K x, q = P_{K*}(-x)."""

    cone: Dict[str, Any]
    dual_cone: Dict[str, Any]
    p: List[float]
    q: List[float]
    reconstruction_error: float
    cross_term: float

    @classmethod
    def from_domain(
        cls, cone: ConeDescriptor, dual_cone: ConeDescriptor, result: MoreauDecomposition
    ) -> "DecompositionReadModel":
        return cls(
            cone=dump_cone(cone),
            dual_cone=dump_cone(dual_cone),
            p=to_list(result.p),
            q=to_list(result.q),
            reconstruction_error=result.reconstruction_error,
            cross_term=result.cross_term,
        )


class LatticeReadModel(DTO):
    op: str
    cone: Dict[str, Any]
    x: List[float]
    y: List[float]
    result: List[float]

    @classmethod
    def from_domain(
        cls, op: str, cone: ConeDescriptor, x: Vector, y: Vector, result: Vector
    ) -> "LatticeReadModel":
        return cls(op=op, cone=dump_cone(cone), x=to_list(x), y=to_list(y), result=to_list(result))


class DualReadModel(DTO):
    """Symbolic dual plus the halfspace form of the input, when one is known."""

    cone: Dict[str, Any]
    dual: Dict[str, Any]
    self_dual: bool
    polyhedral_form: Optional[Dict[str, Any]] = None


class MembershipReadModel(DTO):
    cone: Dict[str, Any]
    x: List[float]
    member: bool
    distance: float
    relative_violation: float


class LeqReadModel(DTO):
    """x <=_K y, decided on the difference y - x."""

    cone: Dict[str, Any]
    x: List[float]
    y: List[float]
    leq: bool
    distance: float


class CatalogEntryReadModel(DTO):
    type: str
    schema_: Dict[str, Any] = Field(..., alias="schema", serialization_alias="schema")
    example: Dict[str, Any]
    round_trips: bool


class CatalogReadModel(DTO):
    """Every descriptor variant with its JSON schema and an example instance."""

    variants: List[CatalogEntryReadModel]
    descriptor_schema: Dict[str, Any]

    def to_report(self) -> dict:
        return self.model_dump(mode="json", by_alias=True)
