"""Majorization predicates and the product inequalities built on them.

This module provides additive and multiplicative majorization tests, the
Fan and Weyl relations used as kernel oracles, the shift lemma and its
reversal, and Lewent's inequality.
"""

# Local Modules
from harnack_verifier.majorization.lemmas import (
    lewent,
    lemma_shift,
    lemma_reverse,
)
from harnack_verifier.majorization.predicates import (
    RealVector,
    fan_check,
    as_weights,
    weyl_check,
    majorizes_add,
    majorizes_log,
    spectral_additivity,
)

__all__ = [
    "lewent",
    "lemma_shift",
    "lemma_reverse",
    "RealVector",
    "fan_check",
    "as_weights",
    "weyl_check",
    "majorizes_add",
    "majorizes_log",
    "spectral_additivity",
]
