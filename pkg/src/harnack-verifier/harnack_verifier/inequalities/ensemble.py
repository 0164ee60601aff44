"""Weighted ensembles of matrices."""

# Standard Library
from typing import List, Optional, Sequence

# Third Party
import numpy as np
from pydantic import BaseModel, ConfigDict

# Local Modules
from harnack_verifier.linalg import (
    ComplexMatrix,
    max_norm,
    as_matrix,
    require_same_order,
)
from harnack_verifier.majorization import as_weights
from harnack_verifier.utils.exceptions import WeightError


class EnsembleSpec(BaseModel):
    """Matrices ``Z_1..Z_m`` of a common order with convex weights.

    Build instances through :meth:`of`, which raises the library's own
    errors instead of a pydantic ``ValidationError``.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    matrices: List[np.ndarray]
    weights: np.ndarray

    @classmethod
    def of(
        cls, matrices: Sequence[ComplexMatrix], weights: Sequence[float]
    ) -> "EnsembleSpec":
        """Validate and assemble an ensemble.

        Raises
        ------
        ShapeMismatch
            If the matrices are not square of one common order.
        WeightError
            If the weights are invalid or their count differs from ``m``.
        """
        zs = [as_matrix(z) for z in matrices]
        if not zs:
            raise WeightError("an ensemble needs at least one matrix")
        require_same_order(*zs)
        return cls(matrices=zs, weights=as_weights(weights, m=len(zs)))

    @property
    def m(self) -> int:
        return len(self.matrices)

    @property
    def n(self) -> int:
        return self.matrices[0].shape[0]

    def combine(self, matrices: Sequence[ComplexMatrix]) -> ComplexMatrix:
        """Weighted sum ``sum w_i X_i`` with this ensemble's weights."""
        total = np.zeros((self.n, self.n), dtype=np.complex128)
        for weight, x in zip(self.weights, matrices):
            total = total + weight * x
        return total

    @property
    def mean(self) -> ComplexMatrix:
        """``W = sum w_i Z_i``."""
        return self.combine(self.matrices)

    def all_equal(
        self, tol: float, matrices: Optional[Sequence[ComplexMatrix]] = None
    ) -> bool:
        """Whether the matrices (default: the ensemble) pairwise agree.

        Always false for a single matrix, so the flag marks a genuine
        ensemble coincidence.
        """
        xs = list(self.matrices if matrices is None else matrices)
        if len(xs) < 2:
            return False
        return all(
            max_norm(xs[i] - xs[j]) <= tol
            for i in range(len(xs))
            for j in range(i + 1, len(xs))
        )
