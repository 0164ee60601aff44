"""Dense complex linear-algebra kernels for small square matrices.

Determinants use partial-pivoted LU, Hermitian spectra use cyclic complex
Jacobi sweeps, general spectra use Householder reduction to Hessenberg form
followed by single-shift complex QR with Wilkinson shifts, and the full SVD
behind the polar decomposition uses one-sided (Hestenes) Jacobi.
"""

# Standard Library
import math
import cmath
from typing import Tuple, NamedTuple

# Third Party
import numpy as np

# Local Modules
from harnack_verifier.linalg.matrix import (
    Spectrum,
    ComplexMatrix,
    ComplexSpectrum,
    dagger,
    identity,
    max_norm,
    as_matrix,
    is_hermitian,
)
from harnack_verifier.utils import get_logger
from harnack_verifier.utils.constants import (
    HERMITIAN_TOL,
    EIG_CLAMP_TOL,
    JACOBI_OFF_TOL,
    JACOBI_MAX_SWEEPS,
    QR_ITERATIONS_PER_EIGENVALUE,
)
from harnack_verifier.utils.exceptions import (
    NotHermitian,
    NoConvergence,
    LengthMismatch,
)

# Initialize logger
logger = get_logger(service="harnack_verifier.linalg.kernels")

_EPS = np.finfo(np.float64).eps
_TINY = np.finfo(np.float64).tiny


class PolarFactors(NamedTuple):
    """``z = v @ p`` with ``v`` unitary and ``p = (z* z)^(1/2)``."""

    v: ComplexMatrix
    p: ComplexMatrix


# region Determinant
def det_lu(m: ComplexMatrix) -> complex:
    """Determinant via partial-pivoted LU.

    Parameters
    ----------
    m : ComplexMatrix
        Square matrix.

    Returns
    -------
    complex
        ``det(m)``; row swaps flip the sign exactly, and a column whose
        pivot candidates all lie below the underflow floor gives exactly
        zero.
    """
    a = as_matrix(m)
    n = a.shape[0]
    # Subnormal pivots make complex division return NaN
    floor = _TINY * (1.0 + max_norm(a))
    sign = 1.0
    for k in range(n):
        pivot = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[pivot, k]) <= floor:
            return 0j
        if pivot != k:
            a[[k, pivot]] = a[[pivot, k]]
            sign = -sign
        factors = a[k + 1 :, k] / a[k, k]
        a[k + 1 :, k:] -= np.outer(factors, a[k, k:])
    return complex(sign * np.prod(np.diag(a)))


# endregion


# region Jacobi rotations
def _jacobi_rotation(
    app: float, aqq: float, apq: complex
) -> Tuple[float, float, complex]:
    """Rotation annihilating ``apq`` of the Hermitian pair (p, q).

    With ``apq = |apq| * phase`` the rotation is
    ``R = [[c, s * phase], [-s * conj(phase), c]]`` and ``R* A R`` has a zero
    (p, q) entry.
    """
    magnitude = abs(apq)
    phase = apq / magnitude
    zeta = (aqq - app) / (2.0 * magnitude)
    t = math.copysign(1.0, zeta) / (abs(zeta) + math.hypot(1.0, zeta))
    c = 1.0 / math.hypot(1.0, t)
    return c, t * c, phase


def _rotate_columns(
    a: np.ndarray, p: int, q: int, c: float, s: float, phase: complex
) -> None:
    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - s * phase.conjugate() * col_q
    a[:, q] = s * phase * col_p + c * col_q


def _rotate_rows(
    a: np.ndarray, p: int, q: int, c: float, s: float, phase: complex
) -> None:
    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s * phase * row_q
    a[q, :] = s * phase.conjugate() * row_p + c * row_q


def _off_diagonal_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


# endregion


# region Hermitian eigenproblem
def eig_hermitian(h: ComplexMatrix) -> Tuple[Spectrum, ComplexMatrix]:
    """Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi.

    Parameters
    ----------
    h : ComplexMatrix
        Hermitian matrix, ``||h - h*||_max <= 1e-10 (1 + ||h||_max)``.

    Returns
    -------
    Tuple[Spectrum, ComplexMatrix]
        Descending eigenvalues and a unitary ``Q`` whose columns are the
        matching eigenvectors, so ``h = Q diag(values) Q*``.

    Raises
    ------
    NotHermitian
        If ``h`` fails the Hermitian precondition.
    """
    a = as_matrix(h)
    if not is_hermitian(a, HERMITIAN_TOL):
        raise NotHermitian(
            "matrix is not Hermitian within "
            f"{HERMITIAN_TOL:.0e} * (1 + ||h||_max)"
        )
    a = (a + dagger(a)) / 2
    n = a.shape[0]
    q = identity(n)
    target = JACOBI_OFF_TOL * float(np.linalg.norm(a))

    off = _off_diagonal_norm(a)
    sweeps = 0
    while off > target and sweeps < JACOBI_MAX_SWEEPS:
        for p in range(n - 1):
            for r in range(p + 1, n):
                apq = complex(a[p, r])
                if apq == 0:
                    continue
                c, s, phase = _jacobi_rotation(
                    a[p, p].real, a[r, r].real, apq
                )
                _rotate_columns(a, p, r, c, s, phase)
                _rotate_rows(a, p, r, c, s, phase)
                _rotate_columns(q, p, r, c, s, phase)
                a[p, r] = a[r, p] = 0
                a[p, p] = a[p, p].real
                a[r, r] = a[r, r].real
        sweeps += 1
        off = _off_diagonal_norm(a)

    if off > target:
        logger.warning(
            "Jacobi sweeps stopped before reaching the off-diagonal target",
            extra={"off_diagonal": off, "target": target, "sweeps": sweeps},
        )

    values = a.diagonal().real.copy()
    order = np.argsort(-values, kind="stable")
    return values[order], q[:, order]


# endregion


# region General eigenproblem
def sort_spectrum(values: np.ndarray) -> ComplexSpectrum:
    """Canonical order: descending modulus, then real, then imaginary part."""
    values = np.asarray(values, dtype=np.complex128)
    order = np.lexsort((-values.imag, -values.real, -np.abs(values)))
    return values[order]


def _scale_pow2(x: np.ndarray, exponent: int) -> np.ndarray:
    """Multiply by ``2**exponent`` in two halves to avoid overflow."""
    half = exponent // 2
    return x * 2.0**half * 2.0**(exponent - half)


def _hessenberg(a: ComplexMatrix) -> ComplexMatrix:
    """Unitary similarity to upper Hessenberg form by Householder steps."""
    h = a.copy()
    n = h.shape[0]
    for k in range(n - 2):
        x = h[k + 1 :, k]
        if np.linalg.norm(x[1:]) == 0:
            continue
        alpha = np.linalg.norm(x)
        lead = x[0]
        phase = lead / abs(lead) if lead != 0 else 1.0
        v = x.copy()
        v[0] += phase * alpha
        v /= np.linalg.norm(v)
        h[k + 1 :, :] -= 2.0 * np.outer(v, v.conj() @ h[k + 1 :, :])
        h[:, k + 1 :] -= 2.0 * np.outer(h[:, k + 1 :] @ v, v.conj())
        h[k + 2 :, k] = 0
    return h


def _wilkinson_shift(corner: np.ndarray) -> complex:
    """Eigenvalue of the trailing 2x2 block closest to its last entry."""
    p, q = corner[0, 0], corner[0, 1]
    r, s = corner[1, 0], corner[1, 1]
    half_trace = (p + s) / 2
    root = cmath.sqrt(((p - s) / 2) ** 2 + q * r)
    first, second = half_trace + root, half_trace - root
    return first if abs(first - s) <= abs(second - s) else second


def _qr_step(h: np.ndarray, lo: int, hi: int, shift: complex) -> None:
    """One shifted QR step ``H - mu I = QR, H <- RQ + mu I`` on a block."""
    block = h[lo : hi + 1, lo : hi + 1]
    m = block.shape[0]
    diagonal = np.diag_indices(m)
    block[diagonal] -= shift

    rotations = []
    for k in range(m - 1):
        x, y = block[k, k], block[k + 1, k]
        radius = math.hypot(abs(x), abs(y))
        if radius == 0:
            rotations.append(None)
            continue
        c1, c2 = x / radius, y / radius
        rows = block[k : k + 2, k:].copy()
        block[k, k:] = c1.conjugate() * rows[0] + c2.conjugate() * rows[1]
        block[k + 1, k:] = -c2 * rows[0] + c1 * rows[1]
        rotations.append((c1, c2))

    for k, rotation in enumerate(rotations):
        if rotation is None:
            continue
        c1, c2 = rotation
        cols = block[: k + 2, k : k + 2].copy()
        block[: k + 2, k] = cols[:, 0] * c1 + cols[:, 1] * c2
        block[: k + 2, k + 1] = (
            -cols[:, 0] * c2.conjugate() + cols[:, 1] * c1.conjugate()
        )

    block[diagonal] += shift


def eig_general(a: ComplexMatrix) -> ComplexSpectrum:
    """All eigenvalues of a general complex matrix.

    Parameters
    ----------
    a : ComplexMatrix
        Square matrix.

    Returns
    -------
    ComplexSpectrum
        The n eigenvalues in canonical order (see ``sort_spectrum``).

    Raises
    ------
    NoConvergence
        If an eigenvalue fails to deflate within ``100 * n`` iterations.
    """
    a = as_matrix(a)
    n = a.shape[0]
    if max_norm(a) == 0:
        return np.zeros(n, dtype=np.complex128)
    # Scale by a power of two to unit max norm so the shift arithmetic
    # neither overflows nor underflows
    exponent = math.frexp(max_norm(a))[1]
    h = _hessenberg(_scale_pow2(a, -exponent))
    h_norm = max_norm(h)
    limit = QR_ITERATIONS_PER_EIGENVALUE * n
    eigenvalues = np.empty(n, dtype=np.complex128)

    hi = n - 1
    iterations = 0
    while hi >= 0:
        if hi == 0:
            eigenvalues[0] = h[0, 0]
            break

        # Find the top of the unreduced block ending at hi
        lo = hi
        while lo > 0:
            scale = abs(h[lo - 1, lo - 1]) + abs(h[lo, lo])
            if scale == 0:
                scale = h_norm
            if abs(h[lo, lo - 1]) <= _EPS * scale:
                h[lo, lo - 1] = 0
                break
            lo -= 1

        if lo == hi:
            eigenvalues[hi] = h[hi, hi]
            hi -= 1
            iterations = 0
            continue

        iterations += 1
        if iterations > limit:
            logger.error(
                "Shifted QR failed to deflate",
                extra={"order": n, "active_row": hi, "iterations": limit},
            )
            raise NoConvergence(
                f"eigenvalue {hi} did not deflate in {limit} iterations"
            )

        if iterations % 10 == 0:
            # Exceptional shift breaks rare stationary cycles
            shift = h[hi, hi] + abs(h[hi, hi - 1])
        else:
            shift = _wilkinson_shift(h[hi - 1 : hi + 1, hi - 1 : hi + 1])
        _qr_step(h, lo, hi, shift)

    return sort_spectrum(_scale_pow2(eigenvalues, exponent))


# endregion


# region Singular values and polar decomposition
def svd_values(a: ComplexMatrix) -> Spectrum:
    """Singular values as square roots of the eigenvalues of ``a* a``.

    Parameters
    ----------
    a : ComplexMatrix
        Square matrix.

    Returns
    -------
    Spectrum
        Descending singular values; eigenvalues of ``a* a`` that round to
        small negatives are clamped to zero before the root.
    """
    a = as_matrix(a)
    values, _ = eig_hermitian(dagger(a) @ a)
    if values.size and values[-1] < -EIG_CLAMP_TOL * (1 + values[0]):
        logger.warning(
            "Clamping a negative Gram eigenvalue beyond roundoff",
            extra={"eigenvalue": float(values[-1])},
        )
    return np.sqrt(np.clip(values, 0.0, None))


def _complete_basis(w: ComplexMatrix, rank: int) -> ComplexMatrix:
    """Fill columns ``rank..n-1`` of ``w`` with an orthonormal complement."""
    n = w.shape[0]
    for k in range(rank, n):
        known = w[:, :k]
        residual = identity(n) - known @ dagger(known)
        residual -= known @ (dagger(known) @ residual)
        norms = np.linalg.norm(residual, axis=0)
        best = int(np.argmax(norms))
        w[:, k] = residual[:, best] / norms[best]
    return w


def svd_full(
    a: ComplexMatrix,
) -> Tuple[ComplexMatrix, Spectrum, ComplexMatrix]:
    """Full SVD ``a = w diag(sigma) x*`` by one-sided complex Jacobi.

    Parameters
    ----------
    a : ComplexMatrix
        Square matrix.

    Returns
    -------
    Tuple[ComplexMatrix, Spectrum, ComplexMatrix]
        Unitary ``w``, descending ``sigma`` and unitary ``x``. Left singular
        vectors of numerically zero singular values are completed to an
        orthonormal basis.
    """
    g = as_matrix(a)
    n = g.shape[0]
    x = identity(n)

    for _ in range(JACOBI_MAX_SWEEPS):
        rotated = False
        for p in range(n - 1):
            for r in range(p + 1, n):
                alpha = float(np.vdot(g[:, p], g[:, p]).real)
                beta = float(np.vdot(g[:, r], g[:, r]).real)
                gamma = complex(np.vdot(g[:, p], g[:, r]))
                if gamma == 0 or abs(gamma) <= JACOBI_OFF_TOL * math.sqrt(
                    alpha * beta
                ):
                    continue
                c, s, phase = _jacobi_rotation(alpha, beta, gamma)
                _rotate_columns(g, p, r, c, s, phase)
                _rotate_columns(x, p, r, c, s, phase)
                rotated = True
        if not rotated:
            break
    else:
        logger.warning(
            "One-sided Jacobi stopped at the sweep limit",
            extra={"order": n, "sweeps": JACOBI_MAX_SWEEPS},
        )

    sigma = np.linalg.norm(g, axis=0)
    order = np.argsort(-sigma, kind="stable")
    sigma, g, x = sigma[order], g[:, order], x[:, order]

    cutoff = n * _EPS * sigma[0]
    rank = int(np.count_nonzero(sigma > cutoff))
    w = np.zeros_like(g)
    w[:, :rank] = g[:, :rank] / sigma[:rank]
    return _complete_basis(w, rank), sigma, x


def polar(z: ComplexMatrix) -> PolarFactors:
    """Polar decomposition ``z = v p``.

    Parameters
    ----------
    z : ComplexMatrix
        Square matrix, possibly singular.

    Returns
    -------
    PolarFactors
        ``v = w x*`` from the full SVD and ``p = x diag(sigma) x*``.
    """
    w, sigma, x = svd_full(z)
    p = (x * sigma) @ dagger(x)
    return PolarFactors(v=w @ dagger(x), p=(p + dagger(p)) / 2)


def abs_matrix(z: ComplexMatrix) -> ComplexMatrix:
    """Matrix absolute value ``|z| = (z* z)^(1/2)``."""
    return polar(z).p


# endregion


def spec_multiset_equal(
    a: ComplexSpectrum, b: ComplexSpectrum, tol: float
) -> bool:
    """Multiset equality of two spectra within ``tol``.

    Each element of ``a``, taken in canonical order, is greedily paired with
    the nearest unused element of ``b``; multiplicities are respected.

    Raises
    ------
    LengthMismatch
        If the spectra differ in length.
    """
    a = np.atleast_1d(np.asarray(a, dtype=np.complex128))
    b = np.atleast_1d(np.asarray(b, dtype=np.complex128))
    if a.shape != b.shape:
        raise LengthMismatch(
            f"spectra of lengths {a.size} and {b.size} cannot be matched"
        )
    candidates = sort_spectrum(b)
    used = np.zeros(candidates.size, dtype=bool)
    for value in sort_spectrum(a):
        distance = np.abs(candidates - value)
        distance[used] = np.inf
        best = int(np.argmin(distance))
        if distance[best] > tol:
            return False
        used[best] = True
    return True
