"""Product inequalities derived from log-majorization, and Lewent's bound.

``lemma_shift`` and ``lemma_reverse`` check the conclusions of the shift
lemma: if ``x`` is log-majorized by ``y`` and is not a permutation of it,
then ``(1 + x)`` is weakly log-majorized by ``(1 + y)`` with a strict gap in
the full products, and ``prod(1 - x) > prod(1 - y)`` on ``[0, 1)``.
"""

# Standard Library
import math
from typing import Sequence

# Third Party
import numpy as np

# Local Modules
from harnack_verifier.linalg import spec_multiset_equal
from harnack_verifier.models import LemmaReport, LewentReport
from harnack_verifier.utils import get_logger
from harnack_verifier.utils.constants import (
    LEWENT_TOL,
    PERMUTATION_TOL,
    LEWENT_EQUALITY_SPREAD,
)
from harnack_verifier.utils.exceptions import (
    BadDomain,
    HypothesisFailed,
)
from harnack_verifier.majorization.predicates import (
    as_weights,
    majorizes_log,
)

# Initialize logger
logger = get_logger(service="harnack_verifier.majorization.lemmas")


def _check_hypothesis(x: Sequence[float], y: Sequence[float]):
    """Validate the shared hypothesis and return the vectors as arrays."""
    x = np.atleast_1d(np.asarray(x, dtype=np.float64))
    y = np.atleast_1d(np.asarray(y, dtype=np.float64))
    if x.shape != y.shape:
        raise HypothesisFailed(
            f"vectors of lengths {x.size} and {y.size} cannot be compared"
        )
    if np.any(x < 0.0) or np.any(y < 0.0):
        raise HypothesisFailed("entries must be nonnegative")
    verdict = majorizes_log(x, y, weak=False)
    if not verdict.holds:
        raise HypothesisFailed(
            "x is not log-majorized by y "
            f"(first failing prefix {verdict.failing_prefix})"
        )
    if spec_multiset_equal(x, y, PERMUTATION_TOL):
        raise HypothesisFailed("y is a permutation of x")
    return x, y


def lemma_shift(x: Sequence[float], y: Sequence[float]) -> LemmaReport:
    """Check the shifted weak log-majorization and the strict product gap.

    Parameters
    ----------
    x, y : Sequence[float]
        Nonnegative vectors with ``x`` log-majorized by ``y`` and ``y`` not a
        permutation of ``x``.

    Returns
    -------
    LemmaReport
        ``lhs = prod(1 + x)``, ``rhs = prod(1 + y)`` and ``margin = rhs -
        lhs``. ``log_majorized`` records whether ``(1 + x)`` is (fully)
        log-majorized by ``(1 + y)``, which the strict gap rules out.

    Raises
    ------
    HypothesisFailed
        If the hypothesis does not hold for the inputs.
    """
    x, y = _check_hypothesis(x, y)
    weak_log = majorizes_log(1.0 + x, 1.0 + y, weak=True)
    full_log = majorizes_log(1.0 + x, 1.0 + y, weak=False)
    lhs = float(np.prod(1.0 + x))
    rhs = float(np.prod(1.0 + y))
    margin = rhs - lhs
    holds = weak_log.holds and margin > 0.0
    if not holds:
        logger.warning(
            "Shift lemma conclusion failed",
            extra={"margin": margin, "weak_log": weak_log.holds},
        )
    return LemmaReport(
        name="lemma_shift",
        lhs=lhs,
        rhs=rhs,
        margin=margin,
        weak_log=weak_log,
        log_majorized=full_log.holds,
        holds=holds,
    )


def lemma_reverse(x: Sequence[float], y: Sequence[float]) -> LemmaReport:
    """Check ``prod(1 - x) > prod(1 - y)`` under the shift-lemma hypothesis.

    Raises
    ------
    HypothesisFailed
        If the hypothesis does not hold or an entry lies outside ``[0, 1)``.
    """
    x, y = _check_hypothesis(x, y)
    if np.any(x >= 1.0) or np.any(y >= 1.0):
        raise HypothesisFailed("entries must lie in [0, 1)")
    lhs = float(np.prod(1.0 - x))
    rhs = float(np.prod(1.0 - y))
    margin = lhs - rhs
    if margin <= 0.0:
        logger.warning(
            "Reverse lemma conclusion failed", extra={"margin": margin}
        )
    return LemmaReport(
        name="lemma_reverse",
        lhs=lhs,
        rhs=rhs,
        margin=margin,
        holds=margin > 0.0,
    )


def lewent(x: Sequence[float], alpha: Sequence[float]) -> LewentReport:
    """Evaluate both sides of Lewent's inequality.

    Parameters
    ----------
    x : Sequence[float]
        Variables in ``[0, 1)``.
    alpha : Sequence[float]
        Convex weights of the same length.

    Returns
    -------
    LewentReport
        ``lhs = (1 + s) / (1 - s)`` with ``s = sum(alpha * x)`` and
        ``rhs = prod(((1 + x) / (1 - x)) ** alpha)``; equality is flagged
        when the spread of ``x`` is at most ``1e-10``.

    Raises
    ------
    BadDomain
        If a variable lies outside ``[0, 1)`` or the lengths differ.
    WeightError
        If ``alpha`` is not a valid weight vector.
    """
    x = np.atleast_1d(np.asarray(x, dtype=np.float64))
    if x.ndim != 1 or x.size == 0:
        raise BadDomain("x must be a non-empty vector")
    if not np.all(np.isfinite(x)) or np.any(x < 0.0) or np.any(x >= 1.0):
        raise BadDomain("every x_i must lie in [0, 1)")
    if np.size(alpha) != x.size:
        raise BadDomain(f"expected {x.size} weights, got {np.size(alpha)}")
    weights = as_weights(alpha)
    s = float(np.dot(weights, x))
    lhs = (1.0 + s) / (1.0 - s)
    rhs = math.exp(float(np.dot(weights, np.log1p(x) - np.log1p(-x))))
    spread = float(np.max(x) - np.min(x))
    return LewentReport(
        lhs=lhs,
        rhs=rhs,
        equality=spread <= LEWENT_EQUALITY_SPREAD,
        holds=lhs <= rhs + LEWENT_TOL * rhs,
    )
