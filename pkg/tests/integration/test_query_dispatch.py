"""
Integration tests: queries dispatched through the wired container.

Exercises handler registration, tolerance defaults from configuration and
the Result-based error path of every context.
"""

import pytest

from contexts.complementarity import NCPResidualsQuery, SolveNCPQuery
from contexts.complementarity.domain import parse_problem
from contexts.cone_geometry import (
    CatalogQuery,
    DecomposeQuery,
    DualConeQuery,
    LatticeOperationQuery,
    LeqQuery,
    MembershipQuery,
    OpKind,
    ProjectQuery,
    Tolerance,
)
from contexts.cone_geometry.domain import HalfspaceIntersection, Lorentz, Monotone, Orthant
from contexts.order_properties import (
    CheckCrossSubadditiveQuery,
    CheckDualityQuery,
    CheckInvarianceQuery,
    CheckIsotoneQuery,
    CheckSubadditiveQuery,
)
from shared.application.base_query import Query

ORTHANT_PROBLEM = {
    "cone": {"type": "orthant", "dim": 2},
    "f": {"type": "affine", "M": [[1.0, 0.0], [0.0, 1.0]], "q": [-1.0, 2.0]},
}


class TestConeGeometryDispatch:
    """Test cone geometry queries through the bus"""

    async def test_project(self, query_bus):
        # Act
        result = await query_bus.dispatch(ProjectQuery(cone=Orthant(dim=2), x=[3.0, -2.0]))

        # Assert
        assert result.is_success
        assert result.value.point == [3.0, 0.0]
        assert result.value.method == "closed_form"

    async def test_project_dimension_mismatch_is_a_failed_result(self, query_bus):
        result = await query_bus.dispatch(ProjectQuery(cone=Orthant(dim=2), x=[1.0, 2.0, 3.0]))

        assert result.is_failure
        assert result.error_code == "CONE_001"

    async def test_iteration_cap_is_a_solver_failure(self, query_bus):
        cone = HalfspaceIntersection(dim=2, normals=((1.0, 0.0), (1.0, 0.05)))
        tight = Tolerance(membership_tol=1e-8, solver_tol=1e-15, max_iter=1)

        result = await query_bus.dispatch(ProjectQuery(cone=cone, x=[-1.0, -5.0], tolerance=tight))

        assert result.is_failure
        assert result.error_code == "CONE_010"

    async def test_decompose(self, query_bus):
        result = await query_bus.dispatch(DecomposeQuery(cone=Orthant(dim=2), x=[2.0, -3.0]))

        assert result.value.p == [2.0, 0.0]
        assert result.value.q == [0.0, 3.0]

    async def test_lattice(self, query_bus):
        query = LatticeOperationQuery(op=OpKind.JOIN_K, cone=Orthant(dim=2), x=[1.0, 5.0], y=[3.0, 2.0])

        result = await query_bus.dispatch(query)

        assert result.value.result == [3.0, 5.0]

    async def test_dual(self, query_bus):
        result = await query_bus.dispatch(DualConeQuery(cone=Lorentz(dim=3)))

        assert result.value.self_dual
        assert result.value.dual == {"type": "lorentz", "dim": 3}

    async def test_membership_and_leq(self, query_bus):
        member = await query_bus.dispatch(MembershipQuery(cone=Orthant(dim=2), x=[3.0, -4.0]))
        ordered = await query_bus.dispatch(LeqQuery(cone=Orthant(dim=2), x=[0.0, 0.0], y=[1.0, 2.0]))

        assert not member.value.member
        assert member.value.relative_violation == pytest.approx(0.8)
        assert ordered.value.leq

    async def test_catalog(self, query_bus):
        result = await query_bus.dispatch(CatalogQuery())

        assert len(result.value.variants) == 7
        assert all(entry.round_trips for entry in result.value.variants)


class TestOrderPropertiesDispatch:
    """Test property checks through the bus"""

    async def test_isotone_falsified(self, query_bus):
        cone = Lorentz(dim=3)

        result = await query_bus.dispatch(
            CheckIsotoneQuery(projection_cone=cone, order_cone=cone, samples=2000, seed=7)
        )

        assert result.value.falsified
        assert result.value.reverified_violation is None

    async def test_reverify_fills_violation(self, query_bus):
        cone = Lorentz(dim=3)

        result = await query_bus.dispatch(
            CheckSubadditiveQuery(
                projection_cone=cone, order_cone=cone, samples=500, seed=7, reverify=True
            )
        )

        assert result.value.falsified
        assert result.value.reverified_violation > 1e-8 / 2

    async def test_unfalsified_checks(self, query_bus):
        monotone = Monotone(dim=4)
        queries = [
            CheckCrossSubadditiveQuery(cone=Orthant(dim=3), samples=300, seed=1),
            CheckInvarianceQuery(set_cone=Orthant(dim=3), cone=Orthant(dim=3), samples=300, seed=1),
            CheckDualityQuery(cone=Orthant(dim=3), samples=300, seed=1, reverify=True),
            CheckIsotoneQuery(projection_cone=monotone, order_cone=monotone, samples=300, seed=1),
        ]

        for query in queries:
            result = await query_bus.dispatch(query)

            assert result.is_success
            assert result.value.verdict == "unfalsified"
            assert result.value.reverified_violation is None

    async def test_invalid_sampling_is_a_failed_result(self, query_bus):
        result = await query_bus.dispatch(
            CheckDualityQuery(cone=Orthant(dim=3), samples=0, seed=1)
        )

        assert result.error_code == "PROP_001"


class TestComplementarityDispatch:
    """Test complementarity queries through the bus"""

    async def test_solve(self, query_bus):
        result = await query_bus.dispatch(SolveNCPQuery(problem=parse_problem(ORTHANT_PROBLEM)))

        assert result.value.converged
        assert result.value.x == pytest.approx([1.0, 0.0])
        assert result.value.iterations == 1

    async def test_solve_with_auto_step(self, query_bus):
        problem = parse_problem({**ORTHANT_PROBLEM, "step": "auto"})

        result = await query_bus.dispatch(SolveNCPQuery(problem=problem, x0=[5.0, 5.0]))

        assert result.value.converged
        assert result.value.step == pytest.approx(1.0)

    async def test_residuals(self, query_bus):
        problem = parse_problem(ORTHANT_PROBLEM)

        result = await query_bus.dispatch(NCPResidualsQuery(problem=problem, x=[2.0, 0.0]))

        assert not result.value.converged
        assert result.value.complementarity_gap == pytest.approx(2.0)

    async def test_blowup_is_a_solver_failure(self, query_bus):
        problem = parse_problem(
            {**ORTHANT_PROBLEM, "f": {"type": "affine", "M": [[-1.0, 0.0], [0.0, -1.0]], "q": [-1.0, -1.0]}}
        )

        result = await query_bus.dispatch(SolveNCPQuery(problem=problem))

        assert result.error_code == "NCP_010"


class TestUnregisteredQuery:
    async def test_unknown_query_type(self, query_bus):
        class OrphanQuery(Query):
            pass

        result = await query_bus.dispatch(OrphanQuery())

        assert result.error_code == "HANDLER_NOT_FOUND"
