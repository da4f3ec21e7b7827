"""Turns a wire-format problem into a domain NCPProblem."""

from typing import Literal, Optional, Union

from ...domain.services import estimate_step
from ...domain.value_objects import NCPProblem, ProblemSpec

StepOption = Union[float, Literal["auto"]]


def build_problem(
    spec: ProblemSpec, step: Optional[StepOption], power_iteration_steps: int
) -> NCPProblem:
    """
    ``step`` overrides the problem's own step; ``"auto"`` resolves to
    1/λ_max(M) by power iteration.

    Raises:
        MalformedProblemException: non-positive step, dimension mismatch or
            an ``"auto"`` step without a positive leading eigenvalue
    """
    chosen = spec.step if step is None else step
    if chosen == "auto":
        chosen = estimate_step(spec.f.matrix(), power_iteration_steps)
    return NCPProblem(cone=spec.cone, mapping=spec.f, step=float(chosen))
