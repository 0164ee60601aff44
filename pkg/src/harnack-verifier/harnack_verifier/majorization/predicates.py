"""Majorization, log-majorization and the Fan and Weyl relations."""

# Standard Library
from typing import Optional, Sequence

# Third Party
import numpy as np
import numpy.typing as npt

# Local Modules
from harnack_verifier.linalg import (
    ComplexMatrix,
    max_norm,
    as_matrix,
    svd_values,
    eig_general,
    is_hermitian,
    eig_hermitian,
    require_same_order,
)
from harnack_verifier.models import AdditivityReport, MajorizationVerdict
from harnack_verifier.utils.constants import (
    HERMITIAN_TOL,
    ADDITIVITY_TOL,
    WEIGHT_SUM_TOL,
    MAJORIZATION_TOL,
    LOG_MAJORIZATION_TOL,
)
from harnack_verifier.utils.exceptions import (
    BadDomain,
    WeightError,
    NotHermitian,
    LengthMismatch,
)

RealVector = npt.NDArray[np.float64]


def _descending_pair(x: Sequence[float], y: Sequence[float]):
    x = np.atleast_1d(np.asarray(x, dtype=np.float64))
    y = np.atleast_1d(np.asarray(y, dtype=np.float64))
    if x.ndim != 1 or x.shape != y.shape:
        raise LengthMismatch(
            f"vectors of lengths {x.size} and {y.size} cannot be compared"
        )
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise BadDomain("majorization operands must be finite")
    return np.sort(x)[::-1], np.sort(y)[::-1]


def _verdict(
    gaps: np.ndarray,
    tolerances: np.ndarray,
    weak: bool,
) -> MajorizationVerdict:
    """Turn prefix gaps ``y_l - x_l`` into a verdict.

    The final prefix must close to within tolerance unless ``weak``.
    """
    failing: Optional[int] = None
    below = np.flatnonzero(gaps < -tolerances)
    if below.size:
        failing = int(below[0]) + 1
    elif not weak and abs(gaps[-1]) > tolerances[-1]:
        failing = gaps.size
    slack = float(np.min(gaps))
    if not weak:
        slack = min(slack, -abs(float(gaps[-1])))
    return MajorizationVerdict(
        holds=failing is None, failing_prefix=failing, slack=slack
    )


def as_weights(
    weights: Sequence[float], m: Optional[int] = None
) -> RealVector:
    """Validate a convex weight vector.

    Parameters
    ----------
    weights : Sequence[float]
        Candidate weights.
    m : Optional[int]
        Required length, if any.

    Returns
    -------
    RealVector
        The weights, renormalized when their sum drifts from one by at most
        ``WEIGHT_SUM_TOL``.

    Raises
    ------
    WeightError
        If a weight is not positive and finite, the length is wrong, or the
        sum is further than ``WEIGHT_SUM_TOL`` from one.
    """
    w = np.atleast_1d(np.asarray(weights, dtype=np.float64))
    if w.ndim != 1 or w.size == 0:
        raise WeightError("weights must be a non-empty vector")
    if m is not None and w.size != m:
        raise WeightError(f"expected {m} weights, got {w.size}")
    if not np.all(np.isfinite(w)) or np.any(w <= 0.0):
        raise WeightError("every weight must be positive and finite")
    total = float(np.sum(w))
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise WeightError(f"weights sum to {total!r}, not 1")
    return w / total


def majorizes_add(
    x: Sequence[float], y: Sequence[float], weak: bool = False
) -> MajorizationVerdict:
    """Test ``x`` majorized by ``y`` through descending prefix sums.

    Parameters
    ----------
    x, y : Sequence[float]
        Real vectors of equal length; order is irrelevant.
    weak : bool
        Drop the equal-totals requirement.

    Returns
    -------
    MajorizationVerdict
        Each comparison uses tolerance ``1e-10 * (1 + ||y||_1)``.

    Raises
    ------
    LengthMismatch
        If the lengths differ.
    """
    xs, ys = _descending_pair(x, y)
    tol = MAJORIZATION_TOL * (1.0 + float(np.sum(np.abs(ys))))
    gaps = np.cumsum(ys) - np.cumsum(xs)
    return _verdict(gaps, np.full(gaps.size, tol), weak)


def majorizes_log(
    x: Sequence[float], y: Sequence[float], weak: bool = False
) -> MajorizationVerdict:
    """Test ``x`` log-majorized by ``y`` through descending prefix products.

    Products are compared directly, so zero entries need no special care.
    Prefix ``l`` is judged with tolerance ``1e-9 * (1 + prod_{k<=l} y_k)``.

    Raises
    ------
    LengthMismatch
        If the lengths differ.
    BadDomain
        If an entry is negative.
    """
    xs, ys = _descending_pair(x, y)
    if np.any(xs < 0.0) or np.any(ys < 0.0):
        raise BadDomain("log-majorization needs nonnegative entries")
    px = np.cumprod(xs)
    py = np.cumprod(ys)
    return _verdict(py - px, LOG_MAJORIZATION_TOL * (1.0 + py), weak)


def _hermitian_spectrum(h: ComplexMatrix, label: str) -> np.ndarray:
    h = as_matrix(h)
    if not is_hermitian(h, HERMITIAN_TOL):
        raise NotHermitian(f"{label} is not Hermitian")
    values, _ = eig_hermitian(h)
    return values


def fan_check(h: ComplexMatrix, s: ComplexMatrix) -> MajorizationVerdict:
    """Verify ``lambda(h + s)`` majorized by ``lambda(h) + lambda(s)``.

    Raises
    ------
    NotHermitian
        If either operand is not Hermitian.
    """
    lam_h = _hermitian_spectrum(h, "h")
    lam_s = _hermitian_spectrum(s, "s")
    h, s = as_matrix(h), as_matrix(s)
    require_same_order(h, s)
    lam_sum = _hermitian_spectrum(h + s, "h + s")
    return majorizes_add(lam_sum, lam_h + lam_s, weak=False)


def weyl_check(a: ComplexMatrix) -> MajorizationVerdict:
    """Verify ``|lambda(a)|`` log-majorized by ``sigma(a)``.

    The final products agree since both equal ``|det a|``.
    """
    a = as_matrix(a)
    moduli = np.abs(eig_general(a))
    return majorizes_log(moduli, svd_values(a), weak=False)


def spectral_additivity(
    matrices: Sequence[ComplexMatrix],
) -> AdditivityReport:
    """Compare ``lambda(sum A_i)`` with ``sum lambda(A_i)``.

    The spectrum of a sum of Hermitian matrices is the sum of their sorted
    spectra exactly when they share an eigenbasis ordered consistently, so
    an additive result implies the summands commute.

    Raises
    ------
    NotHermitian
        If a summand is not Hermitian.
    ShapeMismatch
        If the summands differ in order.
    """
    hs = [as_matrix(h) for h in matrices]
    if not hs:
        raise LengthMismatch("at least one matrix is required")
    require_same_order(*hs)
    spectra = [
        _hermitian_spectrum(h, f"matrices[{i}]") for i, h in enumerate(hs)
    ]
    total = sum(hs[1:], hs[0].copy())
    lam_total = _hermitian_spectrum(total, "sum")
    deviation = max_norm(lam_total - np.sum(spectra, axis=0))
    scale = 1.0 + sum(max_norm(h) for h in hs)

    commuting = True
    for i, a in enumerate(hs):
        for b in hs[i + 1 :]:
            bound = ADDITIVITY_TOL * (1.0 + max_norm(a) * max_norm(b))
            commutator = a @ b - b @ a
            if max_norm(commutator) > bound:
                commuting = False
    return AdditivityReport(
        additive=deviation <= ADDITIVITY_TOL * scale,
        commuting=commuting,
        max_deviation=deviation,
    )
