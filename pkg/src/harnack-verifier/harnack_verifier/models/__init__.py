"""This module initializes the models for the verifier.

It exposes the matrix JSON payload, the majorization and lemma verdicts, the
inequality reports and the search plan and outcome models.
"""

# Local Modules
from harnack_verifier.models.models import (
    INF_SYMBOL,
    ExtendedReal,
    ChainReport,
    LemmaReport,
    ReproReport,
    SearchStats,
    TrialInputs,
    TrialRecord,
    BoundsReport,
    LewentReport,
    SearchConfig,
    MatrixPayload,
    SearchOutcome,
    AdditivityReport,
    InequalityReport,
    MajorizationVerdict,
)

__all__ = [
    "INF_SYMBOL",
    "ExtendedReal",
    "ChainReport",
    "LemmaReport",
    "ReproReport",
    "SearchStats",
    "TrialInputs",
    "TrialRecord",
    "BoundsReport",
    "LewentReport",
    "SearchConfig",
    "MatrixPayload",
    "SearchOutcome",
    "AdditivityReport",
    "InequalityReport",
    "MajorizationVerdict",
]
