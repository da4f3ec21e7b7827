"""Complementarity Read Models."""

from typing import Any, Dict, List

from contexts.cone_geometry.domain.value_objects import dump_cone, to_list
from shared.application.dto import DTO

from ...domain.value_objects import NCPDiagnostics, NCPProblem, NCPSolution


class NCPDiagnosticsReadModel(DTO):
    """Residuals of a candidate; the converged flag follows the solver's predicate."""

    cone: Dict[str, Any]
    x: List[float]
    step: float
    fixed_point_residual: float
    complementarity_gap: float
    primal_dist: float
    dual_dist: float
    converged: bool

    @classmethod
    def from_domain(
        cls, problem: NCPProblem, x: Any, diagnostics: NCPDiagnostics
    ) -> "NCPDiagnosticsReadModel":
        return cls(
            cone=dump_cone(problem.cone),
            x=to_list(x),
            step=problem.step,
            fixed_point_residual=diagnostics.fixed_point_residual,
            complementarity_gap=diagnostics.complementarity_gap,
            primal_dist=diagnostics.primal_dist,
            dual_dist=diagnostics.dual_dist,
            converged=diagnostics.converged,
        )


class NCPSolutionReadModel(NCPDiagnosticsReadModel):
    iterations: int

    @classmethod
    def from_solution(cls, problem: NCPProblem, solution: NCPSolution) -> "NCPSolutionReadModel":
        base = NCPDiagnosticsReadModel.from_domain(problem, solution.x, solution.diagnostics)
        return cls(**base.model_dump(), iterations=solution.iterations)
