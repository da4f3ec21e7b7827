"""Test Result pattern"""

from contexts.cone_geometry.domain import DimensionMismatchException
from shared.domain.result import Error, Result


class TestResult:
    """Test Result success and failure paths"""

    def test_ok_result(self):
        """Test successful result exposes its value"""
        result = Result.ok(42)

        assert result.is_success
        assert not result.is_failure
        assert result.value == 42
        assert bool(result)

    def test_fail_result(self):
        """Test failed result exposes its error"""
        result = Result.fail("CONE_001", "Dimension mismatch", {"expected": 3})

        assert result.is_failure
        assert result.error == Error("CONE_001", "Dimension mismatch", {"expected": 3})
        assert result.error_code == "CONE_001"
        assert not bool(result)

    def test_from_exception_keeps_code_and_details(self):
        """Test domain exceptions convert with their own code"""
        # Arrange
        exc = DimensionMismatchException("x", expected=3, actual=2)

        # Act
        result = Result.from_exception(exc)

        # Assert
        assert result.error.code == "CONE_001"
        assert result.error.details == {"name": "x", "expected": 3, "actual": 2}

    def test_map_skips_failures(self):
        """Test map applies only to successes"""
        assert Result.ok(2).map(lambda v: v * 3).value == 6
        assert Result.fail("X", "boom").map(lambda v: v * 3).is_failure
