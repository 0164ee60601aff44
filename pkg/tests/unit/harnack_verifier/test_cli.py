# Standard Library
import json
from unittest.mock import patch

# Third Party
import numpy as np
import pytest

# My Modules
from harnack_verifier.cli import (
    EXIT_OK,
    EXIT_VIOLATION,
    EXIT_INPUT_ERROR,
    main,
    build_parser,
)


def _stdout_json(capsys):
    return json.loads(capsys.readouterr().out)


class TestVerifyCommand:
    """Test cases for the verify command."""

    def test_verify_psd_holds(self, write_matrix, capsys):
        """Test an asserted inequality that holds."""
        # Arrange
        path = write_matrix(np.diag([0.3, 0.6]))

        # Act
        code = main(["verify", "--theorem", "psd", path])

        # Assert
        payload = _stdout_json(capsys)
        assert code == EXIT_OK
        assert payload["name"] == "psd"
        assert payload["passed"] is True
        assert payload["equality_flags"] == ["SpecPosMatch", "UIsIdentity"]

    def test_verify_with_haar_unitary(self, write_matrix, capsys):
        """Test a seeded Haar unitary."""
        # Arrange
        path = write_matrix(0.4 * np.eye(3))

        # Act
        code = main(
            ["verify", "--theorem", "tung", path, "--unitary", "haar:5"]
        )

        # Assert
        assert code == EXIT_OK
        assert _stdout_json(capsys)["equality_flags"] == ["None"]

    def test_verify_probe_finding(self, write_matrix, capsys):
        """Test that a failing probe exits with a finding."""
        # Arrange
        path = write_matrix(2j * np.eye(3))

        # Act
        code = main(["verify", "--theorem", "tung-probe", path])

        # Assert
        payload = _stdout_json(capsys)
        assert code == EXIT_VIOLATION
        assert payload["holds_lower"] is False
        assert payload["holds_upper"] is False
        assert payload["notes"].endswith(
            "finding: lower and upper bound fails"
        )

    def test_verify_conjecture_finding(
        self, write_matrix, counterexample_matrices, capsys
    ):
        """Test the polar-shifted published pair as a finding."""
        # Arrange
        z1, z2, u = counterexample_matrices
        paths = [write_matrix(u @ z1), write_matrix(u @ z2)]

        # Act
        code = main(
            [
                "verify",
                "--theorem",
                "conjecture",
                *paths,
                "--weights",
                "0.5,0.5",
            ]
        )

        # Assert
        payload = _stdout_json(capsys)
        assert code == EXIT_VIOLATION
        assert payload["holds_lower"] is False
        assert "finding: lower" in payload["notes"]
        assert payload["notes"].startswith("evaluated as evidence")

    def test_verify_conjecture_without_finding(self, write_matrix, capsys):
        """Test that holding sides leave the notes unchanged."""
        # Arrange
        path = write_matrix(np.diag([0.3, 0.6]))

        # Act
        code = main(["verify", "--theorem", "conjecture", path])

        # Assert
        payload = _stdout_json(capsys)
        assert code == EXIT_OK
        assert "finding" not in payload["notes"]

    def test_verify_corollary_with_unitary_file(
        self, write_matrix, counterexample_matrices, capsys
    ):
        """Test a unitary read from a matrix file."""
        # Arrange
        z1, z2, u = counterexample_matrices
        paths = [write_matrix(z1), write_matrix(z2)]
        unitary = write_matrix(u, name="u.json")

        # Act
        code = main(
            ["verify", "--theorem", "corollary", *paths, "--unitary", unitary]
        )

        # Assert
        payload = _stdout_json(capsys)
        assert code == EXIT_OK
        assert payload["holds_lower"] is False
        assert payload["asserted"] == ["upper"]

    def test_verify_writes_output_file(self, write_matrix, tmp_path, capsys):
        """Test --output writes the document instead of stdout."""
        # Arrange
        path = write_matrix(np.diag([0.5, 0.5]))
        output = tmp_path / "report.json"

        # Act
        code = main(
            ["verify", "--theorem", "marcus", path, "--output", str(output)]
        )

        # Assert
        assert code == EXIT_OK
        assert capsys.readouterr().out == ""
        assert json.loads(output.read_text())["name"] == "marcus"

    @pytest.mark.parametrize(
        "argv_tail, code_name",
        [
            (["--theorem", "tung"], "StrictContractionRequired"),
            (["--theorem", "psd", "--unitary", "haar:x"], "BadRange"),
        ],
    )
    def test_verify_input_errors(
        self, write_matrix, capsys, argv_tail, code_name
    ):
        """Test precondition failures exit with the input-error code."""
        # Arrange
        path = write_matrix(2j * np.eye(3))

        # Act
        code = main(["verify", path, *argv_tail])

        # Assert
        assert code == EXIT_INPUT_ERROR
        assert f"error: {code_name}:" in capsys.readouterr().err

    def test_verify_single_matrix_theorem_rejects_two(
        self, write_matrix, capsys
    ):
        """Test a matrix count mismatch."""
        # Arrange
        paths = [write_matrix(np.eye(2) * 0.1), write_matrix(np.eye(2) * 0.2)]

        # Act
        code = main(["verify", "--theorem", "psd", *paths])

        # Assert
        assert code == EXIT_INPUT_ERROR
        assert "error: LengthMismatch:" in capsys.readouterr().err

    def test_verify_malformed_file_names_path(self, tmp_path, capsys):
        """Test that a format error names the file and the field."""
        # Arrange
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"n": 2, "entries": [[1, 0]]}))

        # Act
        code = main(["verify", "--theorem", "marcus", str(path)])

        # Assert
        err = capsys.readouterr().err
        assert code == EXIT_INPUT_ERROR
        assert "error: MatrixFormatError:" in err
        assert str(path) in err
        assert "entries" in err

    def test_verify_missing_file(self, tmp_path, capsys):
        """Test an unreadable input file."""
        # Act
        code = main(
            ["verify", "--theorem", "marcus", str(tmp_path / "none.json")]
        )

        # Assert
        assert code == EXIT_INPUT_ERROR
        assert "error: InputError:" in capsys.readouterr().err

    def test_verify_bad_weights(self, write_matrix, capsys):
        """Test weights that do not parse."""
        # Arrange
        path = write_matrix(0.5 * np.eye(2))

        # Act
        code = main(
            ["verify", "--theorem", "conjecture", path, "--weights", "one"]
        )

        # Assert
        assert code == EXIT_INPUT_ERROR
        assert "error: BadRange:" in capsys.readouterr().err


class TestBoundsCommand:
    """Test cases for the bounds command."""

    def test_bounds_scalar(self, write_matrix, capsys):
        """Test singular values and both products."""
        # Arrange
        path = write_matrix(np.diag([0.5]))

        # Act
        code = main(["bounds", path])

        # Assert
        payload = _stdout_json(capsys)
        assert code == EXIT_OK
        assert payload["singular_values"] == pytest.approx([0.5])
        assert payload["lower"] == pytest.approx(1.0 / 3.0)
        assert payload["upper"] == pytest.approx(3.0)

    def test_bounds_unit_singular_value(self, write_matrix, capsys):
        """Test the INF symbol in the JSON document."""
        # Arrange
        path = write_matrix(np.diag([1.0, 0.5]))

        # Act
        code = main(["bounds", path])

        # Assert
        assert code == EXIT_OK
        assert _stdout_json(capsys)["upper"] == "INF"


class TestSearchCommand:
    """Test cases for the search command."""

    def test_search_psd_clean(self, capsys):
        """Test a theorem-backed search exits cleanly."""
        # Act
        code = main(
            ["search", "--inequality", "psd", "--trials", "50", "--seed", "3"]
        )

        # Assert
        payload = _stdout_json(capsys)
        assert code == EXIT_OK
        assert payload["stats"]["violations"] == 0
        assert payload["config"]["seed"] == 3

    def test_search_default_seed_from_environment(self, capsys):
        """Test the seed default read from HARNACK_DEFAULT_SEED."""
        # Act
        main(["search", "--inequality", "psd", "--trials", "5"])

        # Assert
        assert _stdout_json(capsys)["config"]["seed"] == 7

    def test_search_output_is_byte_identical_across_workers(self, tmp_path):
        """Test determinism of the written document."""
        # Arrange
        outputs = [tmp_path / "one.json", tmp_path / "two.json"]
        common = [
            "search",
            "--inequality",
            "multi",
            "--m",
            "3",
            "--trials",
            "40",
            "--seed",
            "11",
        ]

        # Act
        main([*common, "--workers", "1", "--output", str(outputs[0])])
        main([*common, "--workers", "2", "--output", str(outputs[1])])

        # Assert
        assert outputs[0].read_bytes() == outputs[1].read_bytes()

    def test_search_violation_exit_code(self, counterexample_matrices):
        """Test exit code one when the search records a violation."""
        # Arrange
        z1, z2, u = counterexample_matrices

        # Act
        with patch(
            "harnack_verifier.search.sampling.random_psd_contraction",
            side_effect=[z1, z2],
        ), patch(
            "harnack_verifier.search.sampling.haar_unitary", return_value=u
        ):
            code = main(
                [
                    "search",
                    "--inequality",
                    "conjecture-lower",
                    "--kind",
                    "polar-shifted",
                    "--trials",
                    "1",
                    "--workers",
                    "1",
                ]
            )

        # Assert
        assert code == EXIT_VIOLATION

    @pytest.mark.parametrize(
        "argv_tail, message",
        [
            (["--inequality", "bogus"], "error: UnknownInequality:"),
            (["--inequality", "paper-counterexample"], "UnknownInequality"),
            (
                ["--inequality", "psd", "--eig-lo", "0.9", "--eig-hi", "0.5"],
                "error: InvalidConfig:",
            ),
            (["--inequality", "psd", "--trials", "0"], "trials"),
            (
                ["--inequality", "psd", "--kind", "general"],
                "error: InvalidConfig:",
            ),
            (
                ["--inequality", "conjecture-upper", "--kind", "general"],
                "error: InvalidConfig:",
            ),
        ],
    )
    def test_search_input_errors(self, capsys, argv_tail, message):
        """Test invalid plans exit with the input-error code."""
        # Act
        code = main(["search", *argv_tail])

        # Assert
        assert code == EXIT_INPUT_ERROR
        assert message in capsys.readouterr().err


class TestReproCommand:
    """Test cases for the repro command."""

    def test_repro_passes(self, capsys):
        """Test the published numbers are reproduced."""
        # Act
        code = main(["repro"])

        # Assert
        payload = _stdout_json(capsys)
        assert code == EXIT_OK
        assert payload["lower_rounded"] == 0.6281
        assert payload["mid_rounded"] == 0.625
        assert payload["passed"] is True

    def test_repro_mismatch_exits_with_violation(self, capsys):
        """Test exit code one when the numbers are not reproduced."""
        # Act
        with patch(
            "harnack_verifier.inequalities.verifiers.det_lu",
            return_value=1 + 0j,
        ):
            code = main(["repro"])

        # Assert
        payload = _stdout_json(capsys)
        assert code == EXIT_VIOLATION
        assert payload["mid_match"] is False


class TestParser:
    """Test cases for build_parser."""

    def test_parser_requires_command(self):
        """Test that a subcommand is mandatory."""
        # Act & Assert
        with pytest.raises(SystemExit):
            build_parser().parse_args([])

    def test_parser_rejects_unknown_theorem(self):
        """Test the theorem choices."""
        # Act & Assert
        with pytest.raises(SystemExit):
            build_parser().parse_args(
                ["verify", "--theorem", "bogus", "z.json"]
            )
