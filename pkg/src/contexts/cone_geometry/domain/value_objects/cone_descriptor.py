"""
Cone descriptors.

A descriptor is an immutable, JSON-serializable description of a closed convex
cone. Variants are discriminated by ``type``:

    {"type": "orthant", "dim": n}
    {"type": "lorentz", "dim": n}
    {"type": "monotone", "dim": n, "direction": "nonincreasing" | "nondecreasing"}
    {"type": "monotone_nonneg", "dim": n, "direction": ...}
    {"type": "generated", "dim": n, "generators": [[...], ...]}
    {"type": "halfspaces", "dim": n, "normals": [[...], ...]}
    {"type": "dual", "inner": {...}}
"""

import math
from enum import Enum
from typing import Annotated, Any, Literal, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PositiveInt, TypeAdapter, ValidationError
from pydantic import model_validator

from shared.errors import flatten_validation_errors

from ..exceptions.cone_exceptions import MalformedConeException

VectorTuple = Tuple[float, ...]


class Direction(str, Enum):
    NONINCREASING = "nonincreasing"
    NONDECREASING = "nondecreasing"


class _ConeBase(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


def _check_vectors(vectors: Tuple[VectorTuple, ...], dim: int, field: str) -> None:
    if not vectors:
        raise ValueError(f"{field} must contain at least one vector")
    for idx, vec in enumerate(vectors):
        if len(vec) != dim:
            raise ValueError(f"{field}[{idx}] has length {len(vec)}, expected dim={dim}")
        if not all(math.isfinite(v) for v in vec):
            raise ValueError(f"{field}[{idx}] has non-finite entries")
        if not any(v != 0.0 for v in vec):
            raise ValueError(f"{field}[{idx}] is the zero vector")


class Orthant(_ConeBase):
    """The nonnegative orthant."""

    type: Literal["orthant"] = "orthant"
    dim: PositiveInt


class Lorentz(_ConeBase):
    """Second-order cone {(u, t) : ‖u‖ <= t}, t the last coordinate."""

    type: Literal["lorentz"] = "lorentz"
    dim: int = Field(ge=2)


class Monotone(_ConeBase):
    """{x : x_1 >= ... >= x_n} (nonincreasing) or the reversed chain."""

    type: Literal["monotone"] = "monotone"
    dim: int = Field(ge=2)
    direction: Direction = Direction.NONINCREASING


class MonotoneNonneg(_ConeBase):
    """Monotone cone intersected with the nonnegative orthant."""

    type: Literal["monotone_nonneg"] = "monotone_nonneg"
    dim: PositiveInt
    direction: Direction = Direction.NONINCREASING


class FinitelyGenerated(_ConeBase):
    """{Σ λ_i g_i : λ_i >= 0}."""

    type: Literal["generated"] = "generated"
    dim: PositiveInt
    generators: Tuple[VectorTuple, ...]

    @model_validator(mode="after")
    def _validate_generators(self) -> "FinitelyGenerated":
        _check_vectors(self.generators, self.dim, "generators")
        return self

    def matrix(self) -> np.ndarray:
        """dim × m matrix whose columns are the generators."""
        return np.array(self.generators, dtype=np.float64).T


class HalfspaceIntersection(_ConeBase):
    """{x : ⟨a_i, x⟩ >= 0 for all i}."""

    type: Literal["halfspaces"] = "halfspaces"
    dim: PositiveInt
    normals: Tuple[VectorTuple, ...]

    @model_validator(mode="after")
    def _validate_normals(self) -> "HalfspaceIntersection":
        _check_vectors(self.normals, self.dim, "normals")
        return self

    def matrix(self) -> np.ndarray:
        """m × dim matrix whose rows are the normals."""
        return np.array(self.normals, dtype=np.float64)


class Dual(_ConeBase):
    """Dual cone of ``inner``; projected through the Moreau identity."""

    type: Literal["dual"] = "dual"
    inner: "ConeDescriptor"

    @property
    def dim(self) -> int:
        return self.inner.dim


ConeDescriptor = Annotated[
    Union[Orthant, Lorentz, Monotone, MonotoneNonneg, FinitelyGenerated, HalfspaceIntersection, Dual],
    Field(discriminator="type"),
]

Dual.model_rebuild()

CONE_VARIANTS = (
    Orthant,
    Lorentz,
    Monotone,
    MonotoneNonneg,
    FinitelyGenerated,
    HalfspaceIntersection,
    Dual,
)

_CONE_ADAPTER: TypeAdapter = TypeAdapter(ConeDescriptor)


def parse_cone(data: Any) -> ConeDescriptor:
    """
    Parse a descriptor from a JSON string, a dict, or an existing descriptor.

    Raises:
        MalformedConeException: schema or well-formedness violation
    """
    if isinstance(data, CONE_VARIANTS):
        return data
    try:
        if isinstance(data, (str, bytes)):
            return _CONE_ADAPTER.validate_json(data)
        return _CONE_ADAPTER.validate_python(data)
    except ValidationError as e:
        raise MalformedConeException(
            "Malformed cone descriptor",
            errors=flatten_validation_errors(e),
        )


def dump_cone(cone: ConeDescriptor) -> dict:
    return cone.model_dump(mode="json")


def cone_json_schema() -> dict:
    return _CONE_ADAPTER.json_schema()
