# Standard Library
import json
import time

# Third Party
import numpy as np
import pytest

# My Modules
from harnack_verifier.linalg import eig_hermitian, unitarity_residual
from harnack_verifier.models import ReproReport
from harnack_verifier.utils import InequalityName, round_half_away
from harnack_verifier.inequalities import (
    PUBLISHED_MID,
    PUBLISHED_LOWER,
    paper_counterexample,
    counterexample_inputs,
    reproduce_counterexample,
)


class TestCounterexampleInputs:
    """Test cases for counterexample_inputs."""

    def test_inputs_match_printed_entries(self, counterexample_matrices):
        """Test the matrices, weights and unitary."""
        # Arrange
        z1, z2, u = counterexample_matrices

        # Act
        zs, w, unitary = counterexample_inputs()

        # Assert
        np.testing.assert_array_equal(zs[0], z1)
        np.testing.assert_array_equal(zs[1], z2)
        np.testing.assert_array_equal(unitary, u)
        np.testing.assert_array_equal(w, [0.5, 0.5])

    def test_unitary_is_exact_reflection(self):
        """Test the Pythagorean entries give a unitary to roundoff."""
        # Act
        _, _, u = counterexample_inputs()

        # Assert
        assert unitarity_residual(u) <= 1e-15

    def test_first_matrix_spectrum(self):
        """Test the eigenvalues of Z1."""
        # Act
        zs, _, _ = counterexample_inputs()
        values, _ = eig_hermitian(zs[0])

        # Assert
        np.testing.assert_allclose(values, [0.40680, 0.00320], atol=5e-6)


class TestPaperCounterexample:
    """Test cases for paper_counterexample."""

    def test_published_numbers(self):
        """Test lower 0.6281 above mid 0.6250."""
        # Act
        report = paper_counterexample()

        # Assert
        assert report.name == InequalityName.paper_counterexample
        assert round_half_away(report.lower, 4) == PUBLISHED_LOWER
        assert round_half_away(report.mid, 4) == PUBLISHED_MID
        assert abs(report.lower - PUBLISHED_LOWER) <= 5e-4
        assert abs(report.mid - PUBLISHED_MID) <= 5e-4
        assert report.lower > report.mid
        assert not report.holds_lower

    def test_subchecks_and_tolerances(self):
        """Test the recorded subchecks and the backstop tolerance."""
        # Act
        report = paper_counterexample()

        # Assert
        assert report.subchecks == {
            "operator_convexity": True,
            "lower_match": True,
            "mid_match": True,
            "backstop_match": True,
            "lower_exceeds_mid": True,
        }
        assert report.tolerances["backstop"] == 5e-4
        assert report.passed

    def test_unrounded_values(self):
        """Test the values against a hand evaluation."""
        # Act
        report = paper_counterexample()

        # Assert
        assert report.lower == pytest.approx(0.62815, abs=1e-5)
        assert report.mid == pytest.approx(0.62502, abs=1e-5)


class TestReproduceCounterexample:
    """Test cases for reproduce_counterexample."""

    def test_reproduce_passes_quickly(self):
        """Test the summary and the one-second runtime."""
        # Act
        started = time.perf_counter()
        repro = reproduce_counterexample()
        elapsed = time.perf_counter() - started

        # Assert
        assert repro.passed
        assert repro.lower_rounded == 0.6281
        assert repro.mid_rounded == 0.6250
        assert repro.lower_exceeds_mid
        assert elapsed < 1.0

    def test_reproduce_serializes(self):
        """Test the JSON form carries the verdict."""
        # Act
        payload = reproduce_counterexample().model_dump(mode="json")

        # Assert
        restored = ReproReport.model_validate(json.loads(json.dumps(payload)))
        assert payload["passed"] is True
        assert payload["report"]["name"] == "paper-counterexample"
        assert restored.lower == payload["lower"]
