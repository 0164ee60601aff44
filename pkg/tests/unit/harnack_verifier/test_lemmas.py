# Third Party
import numpy as np
import pytest

# My Modules
from harnack_verifier.majorization import (
    lewent,
    lemma_shift,
    lemma_reverse,
)
from harnack_verifier.utils.exceptions import (
    BadDomain,
    WeightError,
    HypothesisFailed,
)


def _smoothed_pair(rng, n, t):
    """Draw ``y`` in [0.05, 0.95) and pull it towards its geometric mean.

    ``x_i = y_i ** t * g ** (1 - t)`` is log-majorized by ``y`` and is not a
    permutation of it while ``y`` has spread and ``t < 1``.
    """
    g = rng.generator
    while True:
        y = g.uniform(0.05, 0.95, size=n)
        if np.ptp(y) >= 0.1:
            break
    mean = float(np.exp(np.mean(np.log(y))))
    return y**t * mean ** (1.0 - t), y


class TestLemmaShift:
    """Test cases for lemma_shift."""

    def test_lemma_shift_example(self):
        """Test the pair x = (2, 2), y = (4, 1)."""
        # Act
        report = lemma_shift([2.0, 2.0], [4.0, 1.0])

        # Assert
        assert report.name == "lemma_shift"
        assert report.lhs == pytest.approx(9.0)
        assert report.rhs == pytest.approx(10.0)
        assert report.margin == pytest.approx(1.0)
        assert report.weak_log.holds
        assert report.log_majorized is False
        assert report.holds

    def test_lemma_shift_random_pairs(self, rng):
        """Test the conclusion on smoothed random pairs."""
        for index in range(200):
            # Arrange
            t = (0.1, 0.5, 0.9)[index % 3]
            x, y = _smoothed_pair(rng, 2 + index % 5, t)

            # Act
            report = lemma_shift(x, y)

            # Assert
            assert report.holds
            assert report.margin > 0

    @pytest.mark.parametrize(
        "x, y",
        [
            ([1.0, 2.0], [2.0, 1.0]),
            ([4.0, 1.0], [2.0, 2.0]),
            ([-1.0, 1.0], [1.0, 1.0]),
            ([1.0], [1.0, 1.0]),
        ],
    )
    def test_lemma_shift_rejects_hypothesis(self, x, y):
        """Test permutations, non-majorized pairs and bad entries."""
        # Act & Assert
        with pytest.raises(HypothesisFailed):
            lemma_shift(x, y)


class TestLemmaReverse:
    """Test cases for lemma_reverse."""

    def test_lemma_reverse_example(self):
        """Test x = (0.5, 0.5) against y = (0.8, 0.3125)."""
        # Act
        report = lemma_reverse([0.5, 0.5], [0.8, 0.3125])

        # Assert
        assert report.name == "lemma_reverse"
        assert report.lhs == pytest.approx(0.25)
        assert report.rhs == pytest.approx(0.1375)
        assert report.margin == pytest.approx(0.1125)
        assert report.holds

    def test_lemma_reverse_random_pairs(self, rng):
        """Test the reversed product inequality on random pairs."""
        for index in range(200):
            # Arrange
            x, y = _smoothed_pair(rng, 2 + index % 5, 0.5)

            # Act
            report = lemma_reverse(x, y)

            # Assert
            assert report.holds

    def test_lemma_reverse_rejects_entries_above_one(self):
        """Test the [0, 1) domain."""
        # Act & Assert
        with pytest.raises(HypothesisFailed):
            lemma_reverse([2.0, 2.0], [4.0, 1.0])


class TestLewent:
    """Test cases for lewent."""

    def test_lewent_equality_on_constant_input(self):
        """Test that identical variables give equality."""
        # Act
        report = lewent([0.5, 0.5], [0.5, 0.5])

        # Assert
        assert report.lhs == pytest.approx(3.0)
        assert report.rhs == pytest.approx(3.0)
        assert report.equality
        assert report.holds

    def test_lewent_strict_on_spread_input(self):
        """Test a strict inequality for distinct variables."""
        # Act
        report = lewent([0.0, 0.5], [0.5, 0.5])

        # Assert
        assert report.lhs == pytest.approx(5.0 / 3.0)
        assert report.rhs == pytest.approx(np.sqrt(3.0))
        assert not report.equality
        assert report.holds

    def test_lewent_sides_increase_in_each_variable(self, rng):
        """Test central differences against the closed-form derivatives."""
        g = rng.generator
        step = 1e-6
        for _ in range(100):
            # Arrange
            m = int(g.integers(1, 6))
            x = g.uniform(0.05, 0.9, size=m)
            raw = g.uniform(0.5, 1.5, size=m)
            alpha = raw / raw.sum()
            base = lewent(x, alpha)
            s = float(np.dot(alpha, x))

            for i in range(m):
                # Act
                up, down = x.copy(), x.copy()
                up[i] += step
                down[i] -= step
                hi, lo = lewent(up, alpha), lewent(down, alpha)
                d_lhs = (hi.lhs - lo.lhs) / (2 * step)
                d_rhs = (hi.rhs - lo.rhs) / (2 * step)

                # Assert
                exact_lhs = 2 * alpha[i] / (1 - s) ** 2
                exact_rhs = base.rhs * 2 * alpha[i] / (1 - x[i] ** 2)
                assert d_lhs > 0 and d_rhs > 0
                assert d_lhs == pytest.approx(exact_lhs, rel=1e-4)
                assert d_rhs == pytest.approx(exact_rhs, rel=1e-4)

    def test_lewent_random_inputs(self, rng):
        """Test the inequality on random variables and weights."""
        g = rng.generator
        for _ in range(500):
            # Arrange
            m = int(g.integers(1, 8))
            x = g.uniform(0.0, 0.99, size=m)
            alpha = g.standard_exponential(m)

            # Act
            report = lewent(x, alpha / alpha.sum())

            # Assert
            assert report.holds

    @pytest.mark.parametrize(
        "x, alpha",
        [
            ([1.0], [1.0]),
            ([-0.1, 0.2], [0.5, 0.5]),
            ([0.2, 0.3], [1.0]),
            ([], []),
        ],
    )
    def test_lewent_rejects_domain(self, x, alpha):
        """Test variables outside [0, 1) and mismatched lengths."""
        # Act & Assert
        with pytest.raises(BadDomain):
            lewent(x, alpha)

    def test_lewent_rejects_weights(self):
        """Test invalid weights."""
        # Act & Assert
        with pytest.raises(WeightError):
            lewent([0.2, 0.3], [0.7, 0.7])
