"""Equality-case classification for positive semidefinite ``Z``."""

# Standard Library
from typing import List, Iterable, Optional

# Third Party
import numpy as np

# Local Modules
from harnack_verifier.linalg import (
    ComplexMatrix,
    identity,
    max_norm,
    eig_general,
    eig_hermitian,
    spec_multiset_equal,
)
from harnack_verifier.utils import EqualityFlag
from harnack_verifier.utils.constants import (
    UNITARY_SIGN_TOL,
    EIGENVALUE_ONE_TOL,
    SPECTRUM_MATCH_TOL,
)


def classify_equality(
    z: ComplexMatrix,
    u: ComplexMatrix,
    eigenvalues: Optional[np.ndarray] = None,
) -> List[EqualityFlag]:
    """Flag the equality configurations of the pair ``(z, u)``.

    Parameters
    ----------
    z : ComplexMatrix
        Hermitian positive semidefinite matrix.
    u : ComplexMatrix
        Unitary of the same order.
    eigenvalues : Optional[np.ndarray]
        Spectrum of ``z`` when the caller has it already.

    Returns
    -------
    List[EqualityFlag]
        Flags in declaration order, or ``[EqualityFlag.none]``.
    """
    if eigenvalues is None:
        eigenvalues, _ = eig_hermitian(z)
    n = z.shape[0]
    flags = set()
    if np.any(np.abs(eigenvalues - 1.0) <= EIGENVALUE_ONE_TOL):
        flags.add(EqualityFlag.eigenvalue_one)
    lam_uz = eig_general(u @ z)
    if spec_multiset_equal(lam_uz, -eigenvalues, SPECTRUM_MATCH_TOL):
        flags.add(EqualityFlag.spec_neg_match)
    if spec_multiset_equal(lam_uz, eigenvalues, SPECTRUM_MATCH_TOL):
        flags.add(EqualityFlag.spec_pos_match)
    if max_norm(u - identity(n)) <= UNITARY_SIGN_TOL:
        flags.add(EqualityFlag.u_is_identity)
    if max_norm(u + identity(n)) <= UNITARY_SIGN_TOL:
        flags.add(EqualityFlag.u_is_neg_identity)
    return merge_flags(flags)


def merge_flags(*groups: Iterable[EqualityFlag]) -> List[EqualityFlag]:
    """Union of flag groups in declaration order, ``None`` only if empty."""
    present = {flag for group in groups for flag in group}
    present.discard(EqualityFlag.none)
    ordered = [flag for flag in EqualityFlag if flag in present]
    return ordered or [EqualityFlag.none]
