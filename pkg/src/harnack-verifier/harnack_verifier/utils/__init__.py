"""Utility functions for the verifier.

This module provides the enums, tolerance constants, exceptions and helper
functions used across the verifier.
"""

# Local Modules
from harnack_verifier.utils.helpers import (
    get_logger,
    round_half_away,
    relative_slack,
)
from harnack_verifier.utils.enums import (
    Side,
    MatrixKind,
    WeightKind,
    EqualityFlag,
    InequalityName,
)

__all__ = [
    "get_logger",
    "round_half_away",
    "relative_slack",
    "Side",
    "MatrixKind",
    "WeightKind",
    "EqualityFlag",
    "InequalityName",
]
