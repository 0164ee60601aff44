# Standard Library
import json
import math
from unittest.mock import patch

# Third Party
import pytest

# My Modules
from harnack_verifier.models import SearchConfig
from harnack_verifier.search import (
    ALIASES,
    EVALUATORS,
    run_search,
    trial_slack,
    judged_sides,
    replay_violation,
    resolve_inequality,
)
from harnack_verifier.utils import (
    Side,
    MatrixKind,
    WeightKind,
    InequalityName,
)
from harnack_verifier.inequalities import (
    verify_psd,
    conjecture_eval,
)
from harnack_verifier.utils.exceptions import UnknownInequality


def _dump(outcome):
    return json.dumps(outcome.model_dump(mode="json"), sort_keys=True)


class TestResolveInequality:
    """Test cases for resolve_inequality."""

    @pytest.mark.parametrize(
        "name, expected",
        [
            ("psd", InequalityName.psd),
            ("conjecture-upper", InequalityName.conjecture_upper),
            ("verify_multi", InequalityName.multi),
            ("conjecture_eval", InequalityName.conjecture),
        ],
    )
    def test_resolve_identifiers_and_aliases(self, name, expected):
        """Test identifiers and verifier aliases."""
        # Act & Assert
        assert resolve_inequality(name) == expected

    @pytest.mark.parametrize("name", ["nope", "paper-counterexample"])
    def test_resolve_rejects(self, name):
        """Test unknown and unsearchable names."""
        # Act & Assert
        with pytest.raises(UnknownInequality):
            resolve_inequality(name)

    def test_every_alias_has_an_evaluator(self):
        """Test the alias table points at searchable inequalities."""
        # Act & Assert
        assert set(ALIASES.values()) <= set(EVALUATORS)


class TestTrialSlack:
    """Test cases for trial_slack and judged_sides."""

    def test_trial_slack_takes_minimum_relative_slack(self):
        """Test the smaller of the two relative slacks."""
        # Arrange
        report = verify_psd([[0.5]], [[-1.0]])

        # Act
        slack = trial_slack(report, [Side.lower, Side.upper])

        # Assert
        assert slack == pytest.approx(0.0, abs=1e-12)

    def test_trial_slack_without_sides_is_infinite(self):
        """Test that no judged side gives an infinite slack."""
        # Arrange
        report = verify_psd([[0.5]], [[-1.0]])

        # Act & Assert
        assert trial_slack(report, []) == math.inf

    def test_judged_sides_overrides(self):
        """Test that conjecture variants judge fixed sides."""
        # Arrange
        report = conjecture_eval([[[0.5]]], [1.0])

        # Act & Assert
        assert judged_sides(InequalityName.conjecture, report) == [
            Side.lower,
            Side.upper,
        ]
        assert judged_sides(InequalityName.conjecture_lower, report) == [
            Side.lower
        ]
        assert judged_sides(InequalityName.conjecture_upper, report) == [
            Side.upper
        ]

    def test_judged_sides_defaults_to_asserted(self):
        """Test theorem-backed verifiers judge their asserted sides."""
        # Arrange
        report = verify_psd([[0.5]], [[1.0]])

        # Act & Assert
        assert judged_sides(InequalityName.psd, report) == report.asserted


class TestRunSearch:
    """Test cases for run_search and replay_violation."""

    def test_psd_search_has_no_violations(self):
        """Test a theorem-backed run."""
        # Arrange
        cfg = SearchConfig(inequality="psd", n=3, trials=200, seed=7)

        # Act
        outcome = run_search(cfg)

        # Assert
        assert outcome.violations == []
        assert outcome.stats.trials == 200
        assert outcome.stats.violations == 0
        assert outcome.stats.min_slack >= -1e-9
        assert "theorem-backed" in outcome.label
        assert len(outcome.tightest) == cfg.top_k

    def test_tightest_cases_are_sorted(self):
        """Test ascending slack, ties broken by trial index."""
        # Arrange
        cfg = SearchConfig(
            inequality="multi", n=2, m=3, trials=100, seed=3, top_k=5
        )

        # Act
        outcome = run_search(cfg)

        # Assert
        keys = [(t.slack, t.trial_index) for t in outcome.tightest]
        assert keys == sorted(keys)
        assert len(keys) == 5
        assert outcome.tightest[0].slack == outcome.stats.min_slack

    def test_output_is_independent_of_workers(self):
        """Test byte-identical JSON across degrees of parallelism."""
        # Arrange
        base = {
            "inequality": "conjecture",
            "matrix_kind": MatrixKind.general_contraction,
            "weight_kind": WeightKind.dirichlet_flat,
            "trials": 60,
            "seed": 123,
        }

        # Act
        single = run_search(SearchConfig(**base, workers=1))
        fanned = run_search(SearchConfig(**base, workers=3))

        # Assert
        assert _dump(single) == _dump(fanned)

    def test_serialized_outcome_omits_run_details(self):
        """Test that wall time and worker count are not serialized."""
        # Arrange
        cfg = SearchConfig(inequality="psd", trials=5, seed=1, workers=1)

        # Act
        payload = run_search(cfg).model_dump(mode="json")

        # Assert
        assert "workers" not in payload["config"]
        assert "elapsed_seconds" not in payload["stats"]
        assert set(payload["header"]) == {
            "matrices",
            "weights",
            "unitary",
            "rng",
            "violation",
        }

    def test_replay_reproduces_recorded_slack(self):
        """Test that serialized inputs alone reproduce a trial."""
        # Arrange
        cfg = SearchConfig(inequality="multi", n=3, trials=30, seed=9)
        outcome = run_search(cfg)

        # Act & Assert
        for record in outcome.tightest:
            report = replay_violation(cfg, record)
            slack = trial_slack(report, judged_sides(cfg.inequality, report))
            assert abs(slack - record.slack) <= 1e-12

    def test_pinned_polar_shifted_instance_is_a_violation(
        self, counterexample_matrices
    ):
        """Test the search records the published pair as a violation."""
        # Arrange
        z1, z2, u = counterexample_matrices
        cfg = SearchConfig(
            inequality="conjecture-lower",
            matrix_kind=MatrixKind.polar_shifted,
            trials=1,
            seed=0,
            workers=1,
        )

        # Act
        with patch(
            "harnack_verifier.search.sampling.random_psd_contraction",
            side_effect=[z1, z2],
        ), patch(
            "harnack_verifier.search.sampling.haar_unitary", return_value=u
        ):
            outcome = run_search(cfg)

        # Assert
        assert outcome.stats.violations == 1
        violation = outcome.violations[0]
        assert violation.trial_index == 0
        assert violation.slack < -1e-9
        assert not violation.report.holds_lower
        assert "not a proof" in outcome.label

    @pytest.mark.slow
    def test_conjecture_upper_evidence(self):
        """Test 1e5 general contractions against the open upper side."""
        # Arrange
        cfg = SearchConfig(
            inequality="conjecture-upper",
            matrix_kind=MatrixKind.general_contraction,
            n=2,
            m=2,
            trials=100_000,
            seed=2024,
            workers=4,
        )

        # Act
        outcome = run_search(cfg)

        # Assert
        assert outcome.stats.violations == 0
        assert "not a proof" in outcome.label

    @pytest.mark.slow
    def test_conjecture_lower_polar_shifted_finds_violation(self):
        """Test that polar-shifted sampling breaks the lower side."""
        # Arrange
        cfg = SearchConfig(
            inequality="conjecture-lower",
            matrix_kind=MatrixKind.polar_shifted,
            n=2,
            m=2,
            trials=10_000,
            seed=2024,
            workers=4,
        )

        # Act
        outcome = run_search(cfg)

        # Assert
        assert outcome.stats.violations >= 1
        record = outcome.violations[0]
        replayed = replay_violation(cfg, record)
        assert not replayed.holds_lower
