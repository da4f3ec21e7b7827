"""
Cone Geometry CLI Request Schemas.

These schemas define the argument contract of the geometry commands. They
are separate from the queries so flag naming can evolve independently.
"""

from typing import Any, List

from pydantic import BaseModel, ConfigDict, Field, field_validator

from contexts.cone_geometry import ConeDescriptor, OpKind, parse_cone


class ConeRequest(BaseModel):
    """
    Arguments:
        --cone '{"type":"lorentz","dim":3}'
    """

    model_config = ConfigDict(extra="ignore", arbitrary_types_allowed=True)

    cone: ConeDescriptor = Field(..., description="Cone descriptor")

    @field_validator("cone", mode="before")
    @classmethod
    def _parse_cone(cls, value: Any) -> ConeDescriptor:
        return parse_cone(value)


class PointRequest(ConeRequest):
    """
    Arguments:
        --cone '{"type":"orthant","dim":2}' --x '[3,-2]'
    """

    x: List[float] = Field(..., description="Point in the ambient space")


class PairRequest(PointRequest):
    y: List[float] = Field(..., description="Second point")


class LatticeRequest(PairRequest):
    op: OpKind = Field(..., description="meet_K, join_K, meet_L or join_L")
