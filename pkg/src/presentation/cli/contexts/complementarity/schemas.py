"""
Complementarity CLI Request Schemas.

Problem JSON:
    {"cone": {...}, "f": {"type": "affine", "M": [[...]], "q": [...]},
     "step": 1.0, "x0": [...]}
"""

from typing import Any, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, field_validator

from contexts.complementarity import ProblemSpec, parse_problem


class ProblemRequest(BaseModel):
    model_config = ConfigDict(extra="ignore")

    problem: ProblemSpec = Field(..., description="Cone, affine mapping, step and x0")
    step: Optional[Union[PositiveFloat, Literal["auto"]]] = Field(
        default=None, description='Overrides the problem step; "auto" uses 1/λ_max(M)'
    )

    @field_validator("problem", mode="before")
    @classmethod
    def _parse_problem(cls, value: Any) -> ProblemSpec:
        return parse_problem(value)


class SolveRequest(ProblemRequest):
    x0: Optional[List[float]] = Field(default=None, description="Overrides problem.x0")


class ResidualsRequest(ProblemRequest):
    x: List[float] = Field(..., description="Candidate solution")
