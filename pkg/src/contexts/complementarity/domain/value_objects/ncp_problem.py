"""
Cone complementarity problems.

Find x ∈ K with f(x) ∈ K* and ⟨x, f(x)⟩ = 0, equivalently x = P_K(x - αf(x))
for any α > 0.

Problem JSON:
    {"cone": {...}, "f": {"type": "affine", "M": [[...]], "q": [...]},
     "step": 1.0 | "auto", "x0": [...]}
"""

import json
import math
from dataclasses import dataclass
from typing import Any, Callable, List, Literal, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, ValidationError, model_validator

from contexts.cone_geometry.domain.value_objects import (
    ConeDescriptor,
    Vector,
    as_vector,
    parse_cone,
)
from shared.errors import flatten_validation_errors

from ..exceptions.ncp_exceptions import MalformedProblemException

Mapping = Callable[[Vector], Vector]


class AffineMap(BaseModel):
    """f(x) = Mx + q."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    type: Literal["affine"] = "affine"
    M: Tuple[Tuple[float, ...], ...]
    q: Tuple[float, ...]

    @model_validator(mode="after")
    def _check_shape(self) -> "AffineMap":
        n = len(self.q)
        if n == 0:
            raise ValueError("q must be non-empty")
        if len(self.M) != n or any(len(row) != n for row in self.M):
            raise ValueError(f"M must be {n}x{n} to match q")
        if not all(math.isfinite(v) for row in self.M for v in row) or not all(
            math.isfinite(v) for v in self.q
        ):
            raise ValueError("M and q must be finite")
        return self

    @property
    def dim(self) -> int:
        return len(self.q)

    def matrix(self) -> np.ndarray:
        return np.array(self.M, dtype=np.float64)

    def offset(self) -> Vector:
        return np.array(self.q, dtype=np.float64)

    def __call__(self, x: Vector) -> Vector:
        return self.matrix() @ x + self.offset()


@dataclass(frozen=True)
class NCPProblem:
    """
    Attributes:
        cone: K
        mapping: f; an AffineMap or any callable safe for concurrent use
        step: α > 0 of the iteration x <- P_K(x - αf(x))
    """

    cone: ConeDescriptor
    mapping: Mapping
    step: float = 1.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.step) and self.step > 0):
            raise MalformedProblemException(f"Step must be a positive number, got {self.step}")
        if isinstance(self.mapping, AffineMap) and self.mapping.dim != self.cone.dim:
            raise MalformedProblemException(
                f"Affine map has dim {self.mapping.dim}, cone has dim {self.cone.dim}"
            )

    def evaluate(self, x: Vector) -> Vector:
        return as_vector(self.mapping(x), self.cone.dim, name="f(x)")


class ProblemSpec(BaseModel):
    """Wire shape of an affine problem; ``step`` may be ``"auto"``."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    cone: ConeDescriptor
    f: AffineMap
    step: Union[PositiveFloat, Literal["auto"]] = 1.0
    x0: Optional[List[float]] = None

    @model_validator(mode="before")
    @classmethod
    def _parse_cone(cls, data: Any) -> Any:
        if isinstance(data, dict) and "cone" in data:
            data = {**data, "cone": parse_cone(data["cone"])}
        return data


def parse_problem(data: Any) -> ProblemSpec:
    """
    Raises:
        MalformedConeException: the embedded cone descriptor is malformed
        MalformedProblemException: any other schema violation
    """
    if isinstance(data, ProblemSpec):
        return data
    try:
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        return ProblemSpec.model_validate(data)
    except json.JSONDecodeError as e:
        raise MalformedProblemException(f"Problem is not valid JSON: {e.msg}")
    except ValidationError as e:
        raise MalformedProblemException(
            "Malformed complementarity problem",
            errors=flatten_validation_errors(e),
        )


@dataclass(frozen=True, eq=False)
class NCPDiagnostics:
    """
    converged holds iff fixed_point_residual, primal_dist and dual_dist are
    all <= solver_tol·max(1, ‖x‖) and complementarity_gap <=
    solver_tol·max(1, ‖x‖·‖f(x)‖).
    """

    fixed_point_residual: float
    complementarity_gap: float
    primal_dist: float
    dual_dist: float
    converged: bool


@dataclass(frozen=True, eq=False)
class NCPSolution:
    x: Vector
    iterations: int
    step: float
    diagnostics: NCPDiagnostics

    @property
    def converged(self) -> bool:
        return self.diagnostics.converged
