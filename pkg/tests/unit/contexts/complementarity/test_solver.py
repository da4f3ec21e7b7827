"""Test the projection fixed-point solver and its diagnostics"""

import numpy as np
import pytest

from contexts.cone_geometry.domain import DimensionMismatchException, Lorentz, Orthant, Tolerance
from contexts.complementarity.domain import (
    AffineMap,
    NCPProblem,
    NumericalBlowupException,
    residuals,
    solve,
)
from shared.errors import ExitStatus
from tests.oracles import random_spd, solve_lcp_oracle

LCP_INSTANCES = 50


def affine(M, q):
    return AffineMap(M=tuple(map(tuple, np.asarray(M))), q=tuple(q))


class TestSolveExamples:
    """Test worked examples"""

    def test_orthant_shifted_identity(self):
        """Test f(x) = x - b with b = (1, -2) converges to (1, 0) after one update"""
        # Arrange
        problem = NCPProblem(cone=Orthant(dim=2), mapping=affine(np.eye(2), [-1.0, 2.0]))

        # Act
        solution = solve(problem, [0.0, 0.0])

        # Assert
        np.testing.assert_allclose(solution.x, [1.0, 0.0])
        assert solution.iterations == 1
        assert solution.converged

    def test_lorentz_interior_target(self):
        b = np.array([0.5, 0.0, 2.0])
        problem = NCPProblem(cone=Lorentz(dim=3), mapping=affine(np.eye(3), -b))

        solution = solve(problem, [0.0, 0.0, 0.0])

        np.testing.assert_allclose(solution.x, b, atol=1e-9)
        assert solution.converged

    def test_starting_point_is_projected(self):
        problem = NCPProblem(cone=Orthant(dim=2), mapping=affine(np.eye(2), [-1.0, 2.0]))

        solution = solve(problem, [1.0, -5.0])

        assert solution.iterations == 0
        np.testing.assert_allclose(solution.x, [1.0, 0.0])

    def test_callable_mapping(self):
        b = np.array([2.0, -1.0, 0.5])
        problem = NCPProblem(cone=Orthant(dim=3), mapping=lambda x: x - b)

        solution = solve(problem, np.zeros(3))

        np.testing.assert_allclose(solution.x, [2.0, 0.0, 0.5])


class TestSolveAgainstOracle:
    """Test random SPD linear complementarity problems against enumeration"""

    def test_matches_basis_enumeration(self, rng):
        for _ in range(LCP_INSTANCES):
            # Arrange
            n = int(rng.integers(2, 6))
            M = random_spd(rng, n)
            q = rng.standard_normal(n) * 3.0
            step = 1.0 / np.linalg.eigvalsh(M).max()
            problem = NCPProblem(cone=Orthant(dim=n), mapping=affine(M, q), step=step)

            # Act
            solution = solve(problem, np.zeros(n))

            # Assert
            assert solution.converged
            np.testing.assert_allclose(solution.x, solve_lcp_oracle(M, q), atol=1e-6)


class TestSolveFailureModes:
    """Test non-convergence and divergence"""

    def test_iteration_cap_is_not_an_error(self):
        # Arrange
        M = np.diag([1.0, 1000.0])
        problem = NCPProblem(cone=Orthant(dim=2), mapping=affine(M, [-1.0, -1.0]), step=1e-3)

        # Act
        solution = solve(problem, [0.0, 0.0], max_iter=5)

        # Assert
        assert not solution.converged
        assert solution.iterations == 5
        assert solution.diagnostics.fixed_point_residual > 0.0

    def test_blowup_raises(self):
        problem = NCPProblem(cone=Orthant(dim=2), mapping=affine(-np.eye(2), [-1.0, -1.0]))

        with pytest.raises(NumericalBlowupException) as exc_info:
            solve(problem, [0.0, 0.0], blowup_norm=1e3)

        assert exc_info.value.exit_status == ExitStatus.SOLVER_FAILURE
        assert exc_info.value.details["norm"] > 1e3

    def test_starting_point_dimension(self):
        problem = NCPProblem(cone=Orthant(dim=2), mapping=affine(np.eye(2), [0.0, 0.0]))

        with pytest.raises(DimensionMismatchException) as exc_info:
            solve(problem, [0.0, 0.0, 0.0])

        assert exc_info.value.details["name"] == "x0"


class TestResiduals:
    """Test diagnostics of arbitrary candidates"""

    def test_solution_has_zero_residuals(self):
        problem = NCPProblem(cone=Orthant(dim=2), mapping=affine(np.eye(2), [-1.0, 2.0]))

        diagnostics = residuals([1.0, 0.0], problem)

        assert diagnostics.fixed_point_residual == 0.0
        assert diagnostics.complementarity_gap == 0.0
        assert diagnostics.primal_dist == 0.0
        assert diagnostics.dual_dist == 0.0
        assert diagnostics.converged

    def test_non_solution(self):
        """Test x = (2, 0): f(x) = (1, 2), the step lands on (1, 0)"""
        problem = NCPProblem(cone=Orthant(dim=2), mapping=affine(np.eye(2), [-1.0, 2.0]))

        diagnostics = residuals([2.0, 0.0], problem)

        assert diagnostics.fixed_point_residual == pytest.approx(1.0)
        assert diagnostics.complementarity_gap == pytest.approx(2.0)
        assert diagnostics.primal_dist == 0.0
        assert not diagnostics.converged

    def test_infeasible_candidate(self):
        problem = NCPProblem(cone=Orthant(dim=2), mapping=affine(np.eye(2), [0.0, 0.0]))

        diagnostics = residuals([-1.0, 0.0], problem)

        assert diagnostics.primal_dist == pytest.approx(1.0)
        assert diagnostics.dual_dist == pytest.approx(1.0)

    def test_tighter_tolerance_can_reject(self):
        problem = NCPProblem(cone=Orthant(dim=2), mapping=affine(np.eye(2), [-1.0, 2.0]))
        loose = Tolerance(membership_tol=1e-3, solver_tol=1e-4)

        assert residuals([1.0 + 1e-6, 0.0], problem, loose).converged
        assert not residuals([1.0 + 1e-6, 0.0], problem).converged
