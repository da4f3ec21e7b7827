"""Test the randomized property checks"""

import numpy as np
import pytest

from contexts.cone_geometry.domain import (
    Direction,
    FinitelyGenerated,
    Lorentz,
    Monotone,
    OpKind,
    Orthant,
    dual,
)
from contexts.cone_geometry.domain.services.catalog import example_cones
from contexts.order_properties.domain import (
    EVIDENCE_NOTE,
    ConeDimensionsDifferException,
    InvalidSamplingException,
    PropertyKind,
    Verdict,
    check_cross_subadditive,
    check_duality,
    check_invariance,
    check_isotone,
    check_subadditive,
)
from contexts.order_properties.domain.services import LATTICIAL_NOTE, lattice_violation

SAMPLES = 2000
SEED = 7

HALF_QUADRANT = FinitelyGenerated(dim=2, generators=((1.0, 0.0), (1.0, 1.0)))

# Quick to sample in the default run; the whole catalog is paired under the slow marker.
FAST_CONES = [
    Orthant(dim=3),
    Lorentz(dim=3),
    Monotone(dim=4, direction=Direction.NONINCREASING),
    HALF_QUADRANT,
]


def assert_consistent(report, tol):
    """falsified iff a witness is present iff max_violation exceeds membership_tol"""
    assert report.falsified == (report.witness is not None)
    assert report.falsified == (report.max_violation > tol.membership_tol)


class TestOrthantChecks:
    """Test the orthant passes every check"""

    def test_isotone(self, tol):
        cone = Orthant(dim=4)

        report = check_isotone(cone, cone, SAMPLES, SEED, tol)

        assert report.verdict == Verdict.UNFALSIFIED
        assert report.notes == (EVIDENCE_NOTE, LATTICIAL_NOTE)
        assert_consistent(report, tol)

    def test_subadditive(self, tol):
        cone = Orthant(dim=4)

        report = check_subadditive(cone, cone, SAMPLES, SEED, tol)

        assert report.verdict == Verdict.UNFALSIFIED
        assert report.notes == (EVIDENCE_NOTE,)

    def test_cross_subadditive(self, tol):
        report = check_cross_subadditive(Orthant(dim=3), SAMPLES, SEED, tol)

        assert report.property == PropertyKind.CROSS_SUBADDITIVE
        assert report.verdict == Verdict.UNFALSIFIED
        assert report.order_cone == Orthant(dim=3)

    def test_invariance(self, tol):
        report = check_invariance(Orthant(dim=3), Orthant(dim=3), 500, SEED, tol)

        assert report.verdict == Verdict.UNFALSIFIED

    def test_duality(self, tol):
        report = check_duality(Orthant(dim=3), 500, SEED, tol)

        assert report.verdict == Verdict.UNFALSIFIED
        assert [sub.property for sub in report.sub_reports] == [
            PropertyKind.ISOTONE,
            PropertyKind.SUBADDITIVE,
        ]
        assert report.sub_reports[1].samples == 4 * 500


class TestLorentzChecks:
    """Test the Lorentz cone projection is neither isotone nor subadditive"""

    def test_isotone_falsified_with_witness(self, tol):
        # Arrange
        cone = Lorentz(dim=3)

        # Act
        report = check_isotone(cone, cone, SAMPLES, SEED, tol)

        # Assert
        assert report.verdict == Verdict.FALSIFIED
        assert report.notes == ()
        assert set(report.witness) >= {"u", "k", "v", "p_u", "p_v", "difference", "violation"}
        assert report.witness["violation"] > tol.membership_tol
        assert_consistent(report, tol)

    def test_subadditive_falsified(self, tol):
        cone = Lorentz(dim=3)

        report = check_subadditive(cone, cone, SAMPLES, SEED, tol)

        assert report.verdict == Verdict.FALSIFIED
        assert_consistent(report, tol)

    def test_invariance_falsified(self, tol):
        report = check_invariance(Lorentz(dim=3), Lorentz(dim=3), SAMPLES, SEED, tol)

        assert report.verdict == Verdict.FALSIFIED
        assert report.witness["op"] in {"meet_K", "join_K", "meet_L", "join_L"}
        assert_consistent(report, tol)

    def test_duality_agrees(self, tol):
        """Test both sub-verdicts falsified still counts as agreement"""
        report = check_duality(Lorentz(dim=3), SAMPLES, SEED, tol)

        assert report.verdict == Verdict.UNFALSIFIED
        assert all(sub.falsified for sub in report.sub_reports)
        assert report.order_cone == Lorentz(dim=3)


class TestMonotoneChecks:
    def test_isotone_unfalsified(self, tol):
        cone = Monotone(dim=4, direction=Direction.NONINCREASING)

        report = check_isotone(cone, cone, SAMPLES, SEED, tol)

        assert report.verdict == Verdict.UNFALSIFIED

    def test_duality_report_records_dual_as_order_cone(self, tol):
        cone = Monotone(dim=3, direction=Direction.NONINCREASING)

        report = check_duality(cone, 200, SEED, tol)

        assert report.projection_cone == cone
        assert report.order_cone == dual(cone)


class TestDeterminism:
    """Test reports depend only on inputs and seed"""

    def test_same_seed_same_report(self, tol):
        cone = Lorentz(dim=3)

        first = check_isotone(cone, cone, 300, 42, tol)
        second = check_isotone(cone, cone, 300, 42, tol)

        assert first == second

    def test_workers_do_not_change_report(self, tol):
        cone = FinitelyGenerated(dim=2, generators=((1.0, 0.0), (1.0, 1.0)))

        sequential = check_subadditive(cone, cone, 300, 5, tol, workers=1)
        pooled = check_subadditive(cone, cone, 300, 5, tol, workers=4)

        assert sequential == pooled

    def test_different_seeds_sample_differently(self, tol):
        cone = Lorentz(dim=3)

        first = check_isotone(cone, cone, 50, 1, tol)
        second = check_isotone(cone, cone, 50, 2, tol)

        assert first.max_violation != second.max_violation


class TestCheckValidation:
    """Test malformed sampling parameters are rejected before sampling"""

    @pytest.mark.parametrize("samples,seed", [(0, 1), (10, -1)])
    def test_invalid_sampling(self, tol, samples, seed):
        with pytest.raises(InvalidSamplingException) as exc_info:
            check_isotone(Orthant(dim=2), Orthant(dim=2), samples, seed, tol)

        assert exc_info.value.error_code == "PROP_001"

    def test_dimensions_differ(self, tol):
        with pytest.raises(ConeDimensionsDifferException):
            check_isotone(Orthant(dim=2), Orthant(dim=3), 10, 1, tol)

    def test_invariance_dimensions_differ(self, tol):
        with pytest.raises(ConeDimensionsDifferException):
            check_invariance(Orthant(dim=2), Lorentz(dim=3), 10, 1, tol)


class TestSolverNoise:
    """Test cancellation inside meet and join is not mistaken for a violation"""

    def test_half_quadrant_is_invariant(self, tol):
        report = check_invariance(HALF_QUADRANT, HALF_QUADRANT, 500, 3, tol)

        assert report.verdict == Verdict.UNFALSIFIED, report.witness
        assert_consistent(report, tol)

    def test_cancelling_meet_is_measured_against_operands(self, tol):
        # Arrange
        x = np.array([0.0202, 0.0202])
        y = np.array([231.4, 181.6])

        # Act
        outcome = lattice_violation(x, y, OpKind.MEET_L, HALF_QUADRANT, HALF_QUADRANT, tol)

        # Assert
        assert outcome.violation <= tol.membership_tol
        assert outcome.witness["op"] == "meet_L"


class TestInvarianceMatchesIsotonicity:
    """Test a cone is invariant under its lattice-like operations iff its projection is isotone"""

    @pytest.mark.parametrize("cone", FAST_CONES, ids=lambda c: f"{c.type}{c.dim}")
    def test_verdicts_agree(self, cone, tol):
        # Act
        invariance = check_invariance(cone, cone, SAMPLES, SEED, tol)
        isotone = check_isotone(cone, cone, SAMPLES, SEED, tol)

        # Assert
        assert invariance.verdict == isotone.verdict, (invariance.witness, isotone.witness)

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "cone", example_cones() + [HALF_QUADRANT], ids=lambda c: f"{c.type}{c.dim}"
    )
    def test_verdicts_agree_on_catalog(self, cone, tol):
        invariance = check_invariance(cone, cone, 10_000, SEED, tol, workers=4)
        isotone = check_isotone(cone, cone, 10_000, SEED, tol, workers=4)

        assert invariance.verdict == isotone.verdict, (invariance.witness, isotone.witness)


class TestProofChain:
    """Test an isotone projection onto K is also subadditive for the order of the dual"""

    @pytest.mark.parametrize("cone", example_cones(), ids=lambda c: f"{c.type}{c.dim}")
    def test_isotone_implies_cross_subadditive(self, cone, tol):
        # Act
        isotone = check_isotone(cone, cone, 500, SEED, tol)
        cross = check_cross_subadditive(cone, 500, SEED, tol)

        # Assert
        assert isotone.falsified or not cross.falsified, cross.witness
