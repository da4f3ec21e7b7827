"""Test membership, distance and the induced pre-order"""

import numpy as np
import pytest

from contexts.cone_geometry.domain import (
    DimensionMismatchException,
    Direction,
    Lorentz,
    Monotone,
    Orthant,
    distance,
    leq,
    membership,
    project,
    relative_violation,
)


class TestMembership:
    """Test membership through relative projection distance"""

    @pytest.mark.parametrize(
        "cone,x,expected",
        [
            (Orthant(dim=2), [1.0, 0.0], True),
            (Orthant(dim=2), [1.0, -1.0], False),
            (Lorentz(dim=3), [0.0, 0.0, 1.0], True),
            (Lorentz(dim=3), [1.0, 0.0, 1.0], True),
            (Lorentz(dim=3), [1.0, 1.0, 1.0], False),
            (Monotone(dim=3, direction=Direction.NONINCREASING), [3.0, 2.0, 2.0], True),
            (Monotone(dim=3, direction=Direction.NONINCREASING), [1.0, 2.0, 3.0], False),
        ],
    )
    def test_examples(self, cone, x, expected):
        assert membership(x, cone) is expected

    def test_violation_below_tolerance_counts_as_member(self):
        # Arrange
        x = [1.0, 0.0, 1.0 - 1e-10]

        # Act / Assert
        assert membership(x, Lorentz(dim=3))
        assert relative_violation(x, Lorentz(dim=3)) > 0.0

    def test_zero_is_in_every_cone(self, catalog):
        for cone in catalog:
            assert membership(np.zeros(cone.dim), cone)


class TestDistance:
    """Test distance and its scale-relative form"""

    def test_orthant_distance(self):
        assert distance([1.0, -1.0], Orthant(dim=2)) == pytest.approx(1.0)

    def test_relative_violation_divides_by_norm(self):
        """Test (3, -4) is 4 away from the orthant and has norm 5"""
        assert relative_violation([3.0, -4.0], Orthant(dim=2)) == pytest.approx(0.8)

    def test_relative_violation_uses_unit_floor(self):
        assert relative_violation([0.0, -0.5], Orthant(dim=2)) == pytest.approx(0.5)


class TestLeq:
    """Test x <=_K y iff y - x lies in K"""

    def test_orthant_order_is_componentwise(self):
        assert leq([0.0, 0.0], [1.0, 2.0], Orthant(dim=2))
        assert not leq([0.0, 3.0], [1.0, 2.0], Orthant(dim=2))

    def test_reflexive(self, catalog, rng):
        for cone in catalog:
            x = rng.standard_normal(cone.dim)
            assert leq(x, x, cone)

    def test_translation_compatible(self, catalog, rng):
        """Test x <=_K y iff x + z <=_K y + z, on pairs inside and outside the order"""
        for cone in catalog:
            for _ in range(25):
                # Arrange
                x = rng.standard_normal(cone.dim)
                z = 3.0 * rng.standard_normal(cone.dim)
                inside = project(rng.standard_normal(cone.dim), cone).point
                raw = rng.standard_normal(cone.dim)

                # Act / Assert
                for step in (inside, raw):
                    assert leq(x, x + step, cone) == leq(x + z, x + step + z, cone), cone
                assert leq(x + z, x + inside + z, cone)

    def test_lorentz_order(self):
        assert leq([0.0, 0.0, 0.0], [0.5, 0.0, 1.0], Lorentz(dim=3))
        assert not leq([0.0, 0.0, 0.0], [2.0, 0.0, 1.0], Lorentz(dim=3))

    def test_mismatched_y_is_named(self):
        with pytest.raises(DimensionMismatchException) as exc_info:
            leq([0.0, 0.0], [1.0, 2.0, 3.0], Orthant(dim=2))

        assert exc_info.value.details["name"] == "y"
