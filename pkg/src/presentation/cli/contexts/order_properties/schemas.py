"""Order Properties CLI Request Schemas."""

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from contexts.cone_geometry import ConeDescriptor, parse_cone

SAME_CONE = "same"


def _cone(value: Any) -> ConeDescriptor:
    return parse_cone(value)


class PairCheckRequest(BaseModel):
    """
    Arguments:
        --proj-cone '{"type":"lorentz","dim":3}' --order-cone same

    ``same`` reuses the projection cone as the order cone.
    """

    model_config = ConfigDict(extra="ignore", arbitrary_types_allowed=True)

    proj_cone: ConeDescriptor = Field(..., description="Cone projected onto")
    order_cone: ConeDescriptor = Field(..., description="Cone inducing the order")

    @model_validator(mode="before")
    @classmethod
    def _resolve_same(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get("order_cone") == SAME_CONE:
            return {**data, "order_cone": data.get("proj_cone")}
        return data

    @field_validator("proj_cone", "order_cone", mode="before")
    @classmethod
    def _parse_cone(cls, value: Any) -> ConeDescriptor:
        return _cone(value)


class ConeCheckRequest(BaseModel):
    model_config = ConfigDict(extra="ignore", arbitrary_types_allowed=True)

    cone: ConeDescriptor = Field(..., description="Cone under test")

    @field_validator("cone", mode="before")
    @classmethod
    def _parse_cone(cls, value: Any) -> ConeDescriptor:
        return _cone(value)


class InvarianceCheckRequest(ConeCheckRequest):
    """
    Arguments:
        --set-cone '{"type":"monotone","dim":3}' --cone '{"type":"orthant","dim":3}'
    """

    set_cone: ConeDescriptor = Field(..., description="Closed convex cone tested for invariance")

    @field_validator("set_cone", mode="before")
    @classmethod
    def _parse_set_cone(cls, value: Any) -> ConeDescriptor:
        return _cone(value)
