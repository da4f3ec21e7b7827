"""Test symbolic dual construction and polyhedral forms"""

import numpy as np
import pytest

from contexts.cone_geometry.domain import (
    Direction,
    Dual,
    FinitelyGenerated,
    HalfspaceIntersection,
    Lorentz,
    Monotone,
    MonotoneNonneg,
    Orthant,
    dual,
    is_self_dual,
    membership,
    polyhedral_form,
    project,
)


class TestDual:
    """Test dual() rewrite rules"""

    @pytest.mark.parametrize("cone", [Orthant(dim=4), Lorentz(dim=3)])
    def test_self_dual_cones(self, cone):
        assert dual(cone) == cone
        assert is_self_dual(cone)

    def test_generators_become_normals(self):
        cone = FinitelyGenerated(dim=2, generators=((1.0, 0.0), (1.0, 1.0)))

        assert dual(cone) == HalfspaceIntersection(dim=2, normals=((1.0, 0.0), (1.0, 1.0)))

    def test_normals_become_generators(self):
        cone = HalfspaceIntersection(dim=2, normals=((1.0, 0.0), (0.0, 1.0)))

        assert dual(cone) == FinitelyGenerated(dim=2, generators=((1.0, 0.0), (0.0, 1.0)))

    def test_monotone_dual_is_generated_by_chain_differences(self):
        """Test dual of {x1 >= x2 >= x3} is spanned by e1 - e2, e2 - e3"""
        cone = Monotone(dim=3, direction=Direction.NONINCREASING)

        assert dual(cone) == FinitelyGenerated(
            dim=3, generators=((1.0, -1.0, 0.0), (0.0, 1.0, -1.0))
        )

    def test_monotone_nonneg_stays_wrapped(self):
        cone = MonotoneNonneg(dim=3)

        assert dual(cone) == Dual(inner=cone)

    def test_dual_is_involutive(self, catalog, rng, tol):
        """Test dual(dual(K)) describes K again, possibly in another representation"""
        for cone in catalog:
            bidual = dual(dual(cone))
            for _ in range(5):
                x = rng.standard_normal(cone.dim) * 3.0
                np.testing.assert_allclose(
                    project(x, bidual, tol).point, project(x, cone, tol).point, atol=1e-6
                )

    def test_dual_membership_matches_inner_products(self, rng, tol):
        """Test y ∈ K* iff ⟨y, k⟩ >= 0 for the generators k of K"""
        # Arrange
        gens = ((1.0, 0.0, 0.0), (1.0, 1.0, 0.0), (0.0, 1.0, 1.0))
        cone = FinitelyGenerated(dim=3, generators=gens)
        G = np.array(gens)

        # Act & Assert
        for _ in range(100):
            y = rng.standard_normal(3)
            expected = bool(np.all(G @ y >= 0.0))
            assert membership(y, dual(cone), tol) == expected

    def test_not_self_dual(self):
        assert not is_self_dual(Monotone(dim=3))


class TestPolyhedralForm:
    """Test halfspace representations describe the same cone"""

    @pytest.mark.parametrize(
        "cone",
        [
            Orthant(dim=3),
            Monotone(dim=4, direction=Direction.NONINCREASING),
            Monotone(dim=3, direction=Direction.NONDECREASING),
            MonotoneNonneg(dim=4, direction=Direction.NONINCREASING),
            MonotoneNonneg(dim=3, direction=Direction.NONDECREASING),
        ],
    )
    def test_projection_agrees_with_halfspace_form(self, cone, rng, tol):
        """Test closed form and PAVA agree with Dykstra on the halfspace form"""
        form = polyhedral_form(cone)
        assert form is not None

        for _ in range(20):
            x = rng.standard_normal(cone.dim) * 5.0
            direct = project(x, cone, tol).point
            via_dykstra = project(x, form, tol).point
            np.testing.assert_allclose(direct, via_dykstra, atol=1e-6)

    def test_halfspaces_are_their_own_form(self):
        cone = HalfspaceIntersection(dim=2, normals=((1.0, 2.0),))

        assert polyhedral_form(cone) is cone

    def test_lorentz_has_no_form(self):
        assert polyhedral_form(Lorentz(dim=3)) is None
