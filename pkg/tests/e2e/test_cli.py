"""
End-to-end tests of the conelab command.

Each test runs main() in-process and reads the single JSON document it writes
to stdout; logs go to stderr.
"""

import json

import pytest

from main import main

ORTHANT2 = '{"type": "orthant", "dim": 2}'
LORENTZ3 = '{"type": "lorentz", "dim": 3}'
PROBLEM = json.dumps(
    {
        "cone": {"type": "orthant", "dim": 2},
        "f": {"type": "affine", "M": [[1.0, 0.0], [0.0, 1.0]], "q": [-1.0, 2.0]},
    }
)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out else None


class TestGeometryCommands:
    """Test the cone geometry commands"""

    def test_project(self, capsys):
        # Act
        code, document = run_cli(capsys, "project", "--cone", ORTHANT2, "--x", "[3, -2]")

        # Assert
        assert code == 0
        assert document["point"] == [3.0, 0.0]
        assert document["cone"] == {"type": "orthant", "dim": 2}

    def test_lattice(self, capsys):
        code, document = run_cli(
            capsys, "lattice", "--op", "meet_K", "--cone", ORTHANT2, "--x", "[1, 5]", "--y", "[3, 2]"
        )

        assert code == 0
        assert document["result"] == [1.0, 2.0]

    def test_dual_of_generated_cone(self, capsys):
        cone = '{"type": "generated", "dim": 2, "generators": [[1, 0], [1, 1]]}'

        code, document = run_cli(capsys, "dual", "--cone", cone)

        assert code == 0
        assert document["dual"]["type"] == "halfspaces"
        assert document["self_dual"] is False

    def test_catalog(self, capsys):
        code, document = run_cli(capsys, "catalog")

        assert code == 0
        assert [entry["type"] for entry in document["variants"]][0] == "orthant"
        assert "schema" in document["variants"][0]


class TestCheckCommands:
    """Test verdicts map to exit statuses"""

    def test_lorentz_isotone_is_falsified(self, capsys):
        code, document = run_cli(
            capsys,
            "check-isotone",
            "--proj-cone", LORENTZ3,
            "--order-cone", "same",
            "--samples", "2000",
            "--seed", "7",
        )

        assert code == 1
        assert document["verdict"] == "falsified"
        assert document["order_cone"] == document["projection_cone"]
        assert document["witness"]["violation"] > 1e-8

    def test_orthant_isotone_is_unfalsified(self, capsys):
        code, document = run_cli(
            capsys, "check-isotone", "--proj-cone", ORTHANT2, "--order-cone", ORTHANT2,
            "--samples", "500", "--seed", "7",
        )

        assert code == 0
        assert document["verdict"] == "unfalsified"
        assert document["witness"] is None

    def test_lorentz_duality_agrees(self, capsys):
        code, document = run_cli(
            capsys, "check-duality", "--cone", LORENTZ3, "--samples", "2000", "--seed", "7"
        )

        assert code == 0
        assert [sub["verdict"] for sub in document["sub_reports"]] == ["falsified", "falsified"]

    def test_reverify(self, capsys):
        code, document = run_cli(
            capsys, "check-subadditive", "--proj-cone", LORENTZ3, "--order-cone", "same",
            "--samples", "500", "--seed", "3", "--reverify",
        )

        assert code == 1
        assert document["reverified_violation"] > 1e-8 / 2

    def test_reruns_are_byte_identical(self, capsys):
        argv = [
            "check-invariance", "--set-cone", LORENTZ3, "--cone", LORENTZ3,
            "--samples", "300", "--seed", "11", "--workers", "3",
        ]

        main(argv)
        first = capsys.readouterr().out
        main(argv)
        second = capsys.readouterr().out

        assert first == second

    def test_missing_seed_is_an_input_error(self, capsys):
        code, document = run_cli(capsys, "check-duality", "--cone", LORENTZ3, "--samples", "10")

        assert code == 2
        assert document["error"]["code"] == "VALIDATION_ERROR"


class TestComplementarityCommands:
    def test_solve(self, capsys):
        code, document = run_cli(capsys, "solve-ncp", "--problem", PROBLEM)

        assert code == 0
        assert document["x"] == pytest.approx([1.0, 0.0])
        assert document["converged"] is True

    def test_iteration_cap_writes_report_with_solver_failure(self, capsys):
        problem = json.dumps(
            {
                "cone": {"type": "orthant", "dim": 2},
                "f": {"type": "affine", "M": [[1.0, 0.0], [0.0, 1000.0]], "q": [-1.0, -1.0]},
                "step": 0.001,
            }
        )

        code, document = run_cli(capsys, "solve-ncp", "--problem", problem, "--max-iter", "5")

        assert code == 3
        assert document["converged"] is False
        assert document["iterations"] == 5

    def test_residuals(self, capsys):
        code, document = run_cli(capsys, "residuals", "--problem", PROBLEM, "--x", "[1, 0]")

        assert code == 0
        assert document["converged"] is True


class TestInputAndOutput:
    """Test --input documents and --output files"""

    def test_input_document(self, capsys, tmp_path):
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"cone": {"type": "orthant", "dim": 2}, "x": [3, -2]}))

        code, document = run_cli(capsys, "project", "--input", str(path))

        assert code == 0
        assert document["point"] == [3.0, 0.0]

    def test_flags_override_input_document(self, capsys, tmp_path):
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"cone": {"type": "orthant", "dim": 2}, "x": [3, -2]}))

        code, document = run_cli(capsys, "project", "--input", str(path), "--x", "[-1, 4]")

        assert document["point"] == [0.0, 4.0]

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "report.json"

        code = main(["project", "--cone", ORTHANT2, "--x", "[3, -2]", "--output", str(path)])

        assert code == 0
        assert capsys.readouterr().out == ""
        assert json.loads(path.read_text())["point"] == [3.0, 0.0]


class TestInputErrors:
    """Test malformed input yields exit status 2 and an error object"""

    @pytest.mark.parametrize(
        "argv,error_code",
        [
            (["project", "--cone", '{"type": "orthant", "dim": ', "--x", "[1]"], "MALFORMED_JSON"),
            (["project", "--cone", '{"type": "orthant", "dim": 0}', "--x", "[1]"], "CONE_003"),
            (["project", "--cone", ORTHANT2, "--x", "[1, 2, 3]"], "CONE_001"),
            (["project", "--cone", ORTHANT2], "VALIDATION_ERROR"),
            (["teleport"], "BAD_REQUEST"),
        ],
    )
    def test_error_object(self, capsys, argv, error_code):
        code, document = run_cli(capsys, *argv)

        assert code == 2
        assert document["error"]["code"] == error_code
        assert document["error"]["message"]

    def test_solver_failure_status(self, capsys):
        problem = json.dumps(
            {
                "cone": {"type": "orthant", "dim": 2},
                "f": {"type": "affine", "M": [[-1.0, 0.0], [0.0, -1.0]], "q": [-1.0, -1.0]},
            }
        )

        code, document = run_cli(capsys, "solve-ncp", "--problem", problem)

        assert code == 3
        assert document["error"]["code"] == "NCP_010"

    def test_invalid_environment_settings(self, capsys, monkeypatch):
        """Test a rejected CONELAB_ setting is reported like any input error"""
        # Arrange
        monkeypatch.setenv("CONELAB_MEMBERSHIP_TOL", "1e-12")

        # Act
        code, document = run_cli(capsys, "catalog")

        # Assert
        assert code == 2
        assert document["error"]["code"] == "CONFIGURATION_ERROR"
        assert document["error"]["details"]["section"] == "numerics"
