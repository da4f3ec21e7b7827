"""Numerical tolerances shared by every cone operation."""

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Tolerance(BaseModel):
    """
    membership_tol: relative distance-to-cone accepted as membership.
    solver_tol: stopping threshold of the iterative projection paths.
    max_iter: iteration cap of the iterative projection paths.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    membership_tol: float = Field(default=1e-8, ge=0.0)
    solver_tol: float = Field(default=1e-10, ge=0.0)
    max_iter: int = Field(default=100_000, ge=1)

    @model_validator(mode="after")
    def _check_order(self) -> "Tolerance":
        if self.membership_tol < self.solver_tol:
            raise ValueError("membership_tol must be >= solver_tol")
        return self

    def tightened(self, factor: float = 10.0) -> "Tolerance":
        """Same tolerance with solver_tol divided by ``factor``."""
        return self.model_copy(update={"solver_tol": self.solver_tol / factor})

    @classmethod
    def from_config(cls, numerics: Any) -> "Tolerance":
        """Build from NumericsConfig."""
        return cls(
            membership_tol=numerics.MEMBERSHIP_TOL,
            solver_tol=numerics.SOLVER_TOL,
            max_iter=numerics.MAX_ITER,
        )


DEFAULT_TOLERANCE = Tolerance()
