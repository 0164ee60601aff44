"""Bound products, the determinant ratio and side judging."""

# Standard Library
import math
from typing import Dict, Tuple, Optional, Sequence

# Third Party
import numpy as np

# Local Modules
from harnack_verifier.linalg import (
    ComplexMatrix,
    dagger,
    det_lu,
    identity,
    as_matrix,
    require_unitary,
    require_same_order,
)
from harnack_verifier.utils import get_logger, relative_slack
from harnack_verifier.utils.constants import (
    REPORT_RTOL,
    SINGULAR_DET_TOL,
    UNIT_SINGULAR_TOL,
)
from harnack_verifier.utils.exceptions import NotHermitian

# Initialize logger
logger = get_logger(service="harnack_verifier.inequalities.bounds")


def harnack_bounds(
    r: Sequence[float], absolute: bool = False
) -> Tuple[float, float]:
    """Two-sided bound products over singular values.

    Parameters
    ----------
    r : Sequence[float]
        Singular values (or eigenvalues of a positive semidefinite matrix).
    absolute : bool
        Use ``|1 - r_k|`` in the lower product, as general-matrix callers
        need when some ``r_k`` exceeds one.

    Returns
    -------
    Tuple[float, float]
        ``lower = prod (1 - r_k) / (1 + r_k)`` and
        ``upper = prod (1 + r_k) / (1 - r_k)``. The upper product is
        ``inf`` when some ``r_k`` is within ``1e-12`` of one.
    """
    r = np.atleast_1d(np.asarray(r, dtype=np.float64))
    gaps = 1.0 - r
    numerators = np.abs(gaps) if absolute else gaps
    lower = float(np.prod(numerators / (1.0 + r)))
    if np.any(np.abs(gaps) <= UNIT_SINGULAR_TOL):
        return lower, math.inf
    return lower, float(np.prod((1.0 + r) / gaps))


def weighted_bounds(
    spectra: Sequence[Sequence[float]], weights: Sequence[float]
) -> Tuple[float, float]:
    """Weighted geometric mean of the per-matrix bound products.

    Returns
    -------
    Tuple[float, float]
        ``prod_i prod_k ((1 - r_ik) / (1 + r_ik)) ** w_i`` and the reciprocal
        form for the upper side; ``inf`` when a unit value makes an upper
        factor unbounded.
    """
    lowers, uppers = [], []
    for r, weight in zip(spectra, weights):
        r = np.atleast_1d(np.asarray(r, dtype=np.float64))
        gaps = 1.0 - r
        lowers.append(np.prod((gaps / (1.0 + r)) ** weight))
        if np.any(np.abs(gaps) <= UNIT_SINGULAR_TOL):
            uppers.append(math.inf)
        else:
            uppers.append(np.prod(((1.0 + r) / gaps) ** weight))
    return float(np.prod(lowers)), float(np.prod(uppers))


def determinant_ratio(
    numerator: complex, denominator: complex, modulus: bool = False
) -> float:
    """``numerator / |denominator|^2`` with the zero-denominator convention.

    The numerator is the determinant of a Hermitian matrix for every caller
    and must be real within ``1e-9 (1 + |value|)``; ``modulus`` takes its
    absolute value instead.

    Raises
    ------
    NotHermitian
        If a real numerator carries a larger imaginary part.
    """
    if not modulus and abs(numerator.imag) > REPORT_RTOL * (
        1.0 + abs(numerator.real)
    ):
        logger.error(
            "Determinant expected to be real has an imaginary part",
            extra={"real": numerator.real, "imag": numerator.imag},
        )
        raise NotHermitian(
            f"determinant {numerator} of a Hermitian matrix is not real"
        )
    squared = abs(denominator) ** 2
    if squared <= SINGULAR_DET_TOL:
        return math.inf
    value = abs(numerator) if modulus else numerator.real
    return value / squared


def tung_ratio(z: ComplexMatrix, u: ComplexMatrix) -> float:
    """``det(I - Z* Z) / |det(I - U Z)|^2``.

    Returns
    -------
    float
        The ratio, or ``inf`` when ``|det(I - U Z)|^2 <= 1e-300``.

    Raises
    ------
    NotUnitary
        If ``u`` is not unitary within ``1e-8``.
    """
    z = as_matrix(z)
    u = require_unitary(u)
    n = require_same_order(z, u)
    eye = identity(n)
    return determinant_ratio(
        det_lu(eye - dagger(z) @ z), det_lu(eye - u @ z)
    )


def judge_sides(
    lower: Optional[float], mid: float, upper: Optional[float]
) -> Dict[str, object]:
    """Slack and verdict of each bound present.

    A side holds when its slack is at least ``-1e-9`` relative to the
    larger finite magnitude of the compared values. Two infinities of the
    same sign compare equal.
    """

    def side(larger: float, smaller: float) -> Tuple[float, bool]:
        if math.isinf(larger) and math.isinf(smaller) and larger == smaller:
            return 0.0, True
        slack = larger - smaller
        return slack, relative_slack(slack, larger, smaller) >= -REPORT_RTOL

    verdict: Dict[str, object] = {}
    if lower is not None:
        verdict["slack_lower"], verdict["holds_lower"] = side(mid, lower)
    if upper is not None:
        verdict["slack_upper"], verdict["holds_upper"] = side(upper, mid)
    return verdict
