"""Verifiers for Harnack-type determinantal inequalities.

This module provides the bound products and the determinant ratio, the
equality-case classification, one verifier per inequality, and the
published counterexample to the weighted lower bound.
"""

# Local Modules
from harnack_verifier.inequalities.bounds import (
    judge_sides,
    tung_ratio,
    harnack_bounds,
    weighted_bounds,
    determinant_ratio,
)
from harnack_verifier.inequalities.ensemble import EnsembleSpec
from harnack_verifier.inequalities.equality import (
    merge_flags,
    classify_equality,
)
from harnack_verifier.inequalities.verifiers import (
    probe_tung,
    verify_psd,
    psd_spectrum,
    verify_tung,
    verify_multi,
    verify_marcus,
    conjecture_eval,
    verify_corollary,
    multi_proof_chain,
    verify_general_lower,
)
from harnack_verifier.inequalities.counterexample import (
    PUBLISHED_MID,
    PUBLISHED_LOWER,
    paper_counterexample,
    counterexample_inputs,
    reproduce_counterexample,
)

__all__ = [
    "judge_sides",
    "tung_ratio",
    "harnack_bounds",
    "weighted_bounds",
    "determinant_ratio",
    "EnsembleSpec",
    "merge_flags",
    "classify_equality",
    "probe_tung",
    "verify_psd",
    "psd_spectrum",
    "verify_tung",
    "verify_multi",
    "verify_marcus",
    "conjecture_eval",
    "verify_corollary",
    "multi_proof_chain",
    "verify_general_lower",
    "PUBLISHED_MID",
    "PUBLISHED_LOWER",
    "paper_counterexample",
    "counterexample_inputs",
    "reproduce_counterexample",
]
