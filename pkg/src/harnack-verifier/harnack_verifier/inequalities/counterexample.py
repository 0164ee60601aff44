"""The published two-by-two counterexample to the weighted lower bound.

With ``w = (1/2, 1/2)`` the matrices below give a lower bound product of
``0.6281`` against a determinant ratio of ``0.6250``.
"""

# Standard Library
from typing import List, Tuple

# Third Party
import numpy as np

# Local Modules
from harnack_verifier.models import ReproReport, InequalityReport
from harnack_verifier.utils import InequalityName, round_half_away
from harnack_verifier.utils.constants import PAPER_BACKSTOP_TOL
from harnack_verifier.inequalities.verifiers import verify_corollary

PUBLISHED_LOWER = 0.6281
PUBLISHED_MID = 0.6250
DISPLAYED_PLACES = 4


def counterexample_inputs() -> (
    Tuple[List[np.ndarray], np.ndarray, np.ndarray]
):
    """Return ``([Z1, Z2], w, U)``."""
    z1 = np.array([[0.34, -0.15], [-0.15, 0.07]], dtype=np.complex128)
    z2 = np.array([[0.02, -0.01], [-0.01, 0.01]], dtype=np.complex128)
    u = np.array([[-0.60, 0.80], [0.80, 0.60]], dtype=np.complex128)
    return [z1, z2], np.array([0.5, 0.5]), u


def paper_counterexample() -> InequalityReport:
    """Evaluate the counterexample and check the published numbers.

    Returns
    -------
    InequalityReport
        The weighted evaluation with ``holds_lower`` false, plus subchecks
        for the four-decimal matches, the ``5e-4`` backstop and
        ``lower > mid``.
    """
    zs, w, u = counterexample_inputs()
    report = verify_corollary(zs, w, u)
    lower_rounded = round_half_away(report.lower, DISPLAYED_PLACES)
    mid_rounded = round_half_away(report.mid, DISPLAYED_PLACES)
    subchecks = {
        **report.subchecks,
        "lower_match": lower_rounded == PUBLISHED_LOWER,
        "mid_match": mid_rounded == PUBLISHED_MID,
        "backstop_match": (
            abs(report.lower - PUBLISHED_LOWER) <= PAPER_BACKSTOP_TOL
            and abs(report.mid - PUBLISHED_MID) <= PAPER_BACKSTOP_TOL
        ),
        "lower_exceeds_mid": report.lower > report.mid,
    }
    return report.model_copy(
        update={
            "name": InequalityName.paper_counterexample,
            "subchecks": subchecks,
            "tolerances": {
                **report.tolerances,
                "backstop": PAPER_BACKSTOP_TOL,
            },
            "notes": "lower bound product exceeds the determinant ratio",
        }
    )


def reproduce_counterexample() -> ReproReport:
    """Summarize :func:`paper_counterexample` for the command line."""
    report = paper_counterexample()
    return ReproReport(
        lower=report.lower,
        mid=report.mid,
        lower_rounded=round_half_away(report.lower, DISPLAYED_PLACES),
        mid_rounded=round_half_away(report.mid, DISPLAYED_PLACES),
        lower_match=report.subchecks["lower_match"],
        mid_match=report.subchecks["mid_match"],
        backstop_match=report.subchecks["backstop_match"],
        lower_exceeds_mid=report.subchecks["lower_exceeds_mid"],
        report=report,
    )
