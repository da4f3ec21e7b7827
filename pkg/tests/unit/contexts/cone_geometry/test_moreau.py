"""Test the Moreau decomposition over every catalog cone"""

import numpy as np
import pytest

from contexts.cone_geometry.domain import (
    ConsistencyFailureException,
    Orthant,
    dual,
    membership,
    moreau_decompose,
)
from contexts.cone_geometry.domain.services import projection as projection_module
from contexts.cone_geometry.domain.value_objects.projection_result import ProjectionResult
from shared.errors import ExitStatus

SAMPLES_PER_CONE = 1000


class TestMoreauIdentities:
    """Test x = p - q and ⟨p, q⟩ = 0 on seeded Gaussian points"""

    def test_identities_hold_for_catalog(self, catalog):
        # Arrange
        rng = np.random.default_rng(7)

        for cone in catalog:
            for _ in range(SAMPLES_PER_CONE):
                x = rng.standard_normal(cone.dim) * rng.choice([1e-2, 1.0, 1e2])

                # Act
                decomposition = moreau_decompose(x, cone)

                # Assert
                norm = float(np.linalg.norm(x))
                assert decomposition.reconstruction_error <= 1e-7 * max(1.0, norm), cone
                assert decomposition.cross_term <= 1e-7 * max(1.0, norm**2), cone

    def test_parts_lie_in_cone_and_dual(self, catalog, rng):
        for cone in catalog:
            x = rng.standard_normal(cone.dim)

            decomposition = moreau_decompose(x, cone)

            assert membership(decomposition.p, cone)
            assert membership(decomposition.q, dual(cone))

    def test_orthant_splits_positive_and_negative_parts(self):
        decomposition = moreau_decompose([2.0, -3.0, 0.5], Orthant(dim=3))

        np.testing.assert_allclose(decomposition.p, [2.0, 0.0, 0.5])
        np.testing.assert_allclose(decomposition.q, [0.0, 3.0, 0.0])


class TestMoreauConsistencyFailure:
    """Test a broken projection routine surfaces as an internal failure"""

    def test_wrong_projection_raises(self, monkeypatch):
        # Arrange
        def broken(x, cone, tol=None):
            return ProjectionResult(np.ones(cone.dim), 0, 0.0, projection_module.projection_method(cone))

        monkeypatch.setattr(projection_module, "project", broken)

        # Act / Assert
        with pytest.raises(ConsistencyFailureException) as exc_info:
            moreau_decompose([1.0, -1.0], Orthant(dim=2))

        assert exc_info.value.exit_status == ExitStatus.INTERNAL_ERROR
        assert exc_info.value.details["reconstruction_error"] > 0.0
