"""Test sample evaluation and merging"""

from contexts.order_properties.domain.services import SampleOutcome, run_samples


def _outcomes(violations):
    def evaluate(index):
        return SampleOutcome(violation=violations[index], witness={"index": index})

    return evaluate


class TestRunSamples:
    """Test the summary keeps the worst violation and the first witness"""

    def test_no_violation_no_witness(self):
        summary = run_samples(_outcomes([0.0, 1e-12, 5e-9]), 3, membership_tol=1e-8)

        assert summary.witness is None
        assert summary.max_violation == 5e-9

    def test_witness_is_lowest_violating_index(self):
        # Arrange
        violations = [0.0, 0.2, 0.9, 0.5]

        # Act
        summary = run_samples(_outcomes(violations), 4, membership_tol=1e-8)

        # Assert
        assert summary.witness == {"index": 1}
        assert summary.max_violation == 0.9

    def test_independent_of_workers(self):
        violations = [((7 * i) % 11) / 10.0 for i in range(200)]

        sequential = run_samples(_outcomes(violations), 200, membership_tol=0.5, workers=1)
        pooled = run_samples(_outcomes(violations), 200, membership_tol=0.5, workers=4)

        assert sequential == pooled

    def test_confirmed_outcome_replaces_candidate(self):
        """Test a candidate that vanishes when re-measured is not a witness"""
        # Arrange
        violations = [0.0, 2e-8, 0.9, 0.5]
        confirmed = [0.0, 1e-12, 0.8, 0.5]

        # Act
        summary = run_samples(
            _outcomes(violations), 4, membership_tol=1e-8, confirm=_outcomes(confirmed)
        )

        # Assert
        assert summary.witness == {"index": 2}
        assert summary.max_violation == 0.8

    def test_confirm_only_sees_candidates(self):
        seen = []

        def confirm(index):
            seen.append(index)
            return SampleOutcome(violation=1.0, witness={"index": index})

        run_samples(_outcomes([0.0, 0.3, 1e-9, 0.4]), 4, membership_tol=1e-8, confirm=confirm)

        assert seen == [1, 3]
