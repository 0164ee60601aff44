"""Seeded Monte-Carlo search over the inequalities.

This module provides per-trial random streams, instance sampling, the
search runner with its parallel fan-out, and replay of recorded trials.
"""

# Local Modules
from harnack_verifier.search.runner import (
    ALIASES,
    EVALUATORS,
    run_search,
    trial_slack,
    judged_sides,
    replay_violation,
    resolve_inequality,
)
from harnack_verifier.search.sampling import (
    sample_instance,
    derive_trial_rng,
)

__all__ = [
    "ALIASES",
    "EVALUATORS",
    "run_search",
    "trial_slack",
    "judged_sides",
    "replay_violation",
    "resolve_inequality",
    "sample_instance",
    "derive_trial_rng",
]
