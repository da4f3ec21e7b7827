"""
Numerics configuration.

Defaults for every tolerance and iteration cap used by the cone library.
CLI flags override these per run.
"""

from pydantic import Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from config.types import NumericsConfigType


class NumericsConfig(BaseSettings):
    """
    Numerical defaults.

    Environment Variables:
        CONELAB_MEMBERSHIP_TOL: Relative distance-to-cone accepted as membership
        CONELAB_SOLVER_TOL: Stopping threshold of iterative projection solvers
        CONELAB_MAX_ITER: Iteration cap of iterative projection solvers
        CONELAB_NCP_MAX_ITER: Iteration cap of the complementarity fixed-point loop
        CONELAB_NCP_BLOWUP_NORM: Iterate norm treated as divergence
        CONELAB_CHECK_WORKERS: Worker threads used by property falsifiers
        CONELAB_POWER_ITERATION_STEPS: Power-iteration steps for the automatic NCP step
    """

    MEMBERSHIP_TOL: float = Field(default=1e-8, ge=0.0)
    SOLVER_TOL: float = Field(default=1e-10, ge=0.0)
    MAX_ITER: int = Field(default=100_000, ge=1)
    NCP_MAX_ITER: int = Field(default=100_000, ge=1)
    NCP_BLOWUP_NORM: float = Field(default=1e12, gt=0.0)
    CHECK_WORKERS: int = Field(default=1, ge=1)
    POWER_ITERATION_STEPS: int = Field(default=50, ge=1)

    model_config = SettingsConfigDict(
        case_sensitive=True,
        extra="ignore",
        env_prefix="CONELAB_",
    )

    @model_validator(mode="after")
    def check_tolerance_order(self) -> "NumericsConfig":
        if self.MEMBERSHIP_TOL < self.SOLVER_TOL:
            raise ValueError("MEMBERSHIP_TOL must be >= SOLVER_TOL")
        return self

    def to_dict(self) -> NumericsConfigType:
        """Convert to typed dictionary format."""
        return NumericsConfigType(
            membership_tol=self.MEMBERSHIP_TOL,
            solver_tol=self.SOLVER_TOL,
            max_iter=self.MAX_ITER,
            ncp_max_iter=self.NCP_MAX_ITER,
            ncp_blowup_norm=self.NCP_BLOWUP_NORM,
            check_workers=self.CHECK_WORKERS,
            power_iteration_steps=self.POWER_ITERATION_STEPS,
        )
