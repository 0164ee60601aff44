"""Seeded sampling of unitaries, contractions and weight vectors."""

# Standard Library
import math
from typing import Optional

# Third Party
import numpy as np

# Local Modules
from harnack_verifier.linalg.matrix import ComplexMatrix, dagger
from harnack_verifier.utils.constants import MAX_ORDER
from harnack_verifier.utils.exceptions import BadRange, ShapeMismatch

_UINT64_LIMIT = 2**64


class RngState:
    """Reproducible random stream addressed by ``(seed, stream)``.

    The stream is a Philox counter-based generator keyed through a
    ``SeedSequence`` whose spawn key is the stream index, so identical
    ``(seed, stream)`` pairs give identical draws on every platform and
    distinct streams are statistically independent.

    An instance advances as it is drawn from; build a fresh instance to
    replay a stream from its start.
    """

    __slots__ = ("seed", "stream", "_generator")

    def __init__(self, seed: int, stream: int = 0) -> None:
        for name, value in (("seed", seed), ("stream", stream)):
            if not 0 <= int(value) < _UINT64_LIMIT:
                raise BadRange(f"{name} must be a 64-bit unsigned integer")
        self.seed = int(seed)
        self.stream = int(stream)
        self._generator: Optional[np.random.Generator] = None

    @property
    def generator(self) -> np.random.Generator:
        if self._generator is None:
            sequence = np.random.SeedSequence(
                entropy=self.seed, spawn_key=(self.stream,)
            )
            self._generator = np.random.Generator(np.random.Philox(sequence))
        return self._generator

    def __repr__(self) -> str:
        return f"RngState(seed={self.seed}, stream={self.stream})"


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_ORDER:
        raise ShapeMismatch(f"matrix order {n} outside 1..{MAX_ORDER}")


def haar_unitary(n: int, rng: RngState) -> ComplexMatrix:
    """Draw a Haar-distributed unitary matrix.

    Parameters
    ----------
    n : int
        Matrix order, 1 <= n <= 64.
    rng : RngState
        Stream to draw from.

    Returns
    -------
    ComplexMatrix
        ``Q`` from the QR factorization of a complex Ginibre matrix, with the
        phases of ``diag(R)`` divided out.
    """
    _check_order(n)
    generator = rng.generator
    ginibre = (
        generator.standard_normal((n, n))
        + 1j * generator.standard_normal((n, n))
    ) / math.sqrt(2.0)
    q, r = np.linalg.qr(ginibre)
    diagonal = np.diag(r)
    return q * (diagonal / np.abs(diagonal))


def random_psd_contraction(
    n: int, rng: RngState, eig_lo: float, eig_hi: float
) -> ComplexMatrix:
    """Draw ``Q diag(r) Q*`` with Haar ``Q`` and ``r`` uniform in a range.

    Raises
    ------
    BadRange
        Unless ``0 <= eig_lo <= eig_hi < 1``.
    """
    if not 0.0 <= eig_lo <= eig_hi < 1.0:
        raise BadRange(
            f"eigenvalue range [{eig_lo}, {eig_hi}] must satisfy "
            "0 <= eig_lo <= eig_hi < 1"
        )
    q = haar_unitary(n, rng)
    r = rng.generator.uniform(eig_lo, eig_hi, size=n)
    z = (q * r) @ dagger(q)
    return (z + dagger(z)) / 2


def random_contraction(
    n: int, rng: RngState, sv_lo: float, sv_hi: float
) -> ComplexMatrix:
    """Draw ``U1 diag(r) U2*`` with Haar ``U1, U2`` and uniform ``r``.

    ``sv_hi`` may exceed one, in which case the sample is a general matrix
    with singular values below ``sv_hi`` rather than a contraction.

    Raises
    ------
    BadRange
        Unless ``0 <= sv_lo <= sv_hi`` and both are finite.
    """
    if not (0.0 <= sv_lo <= sv_hi and math.isfinite(sv_hi)):
        raise BadRange(f"singular value range [{sv_lo}, {sv_hi}] is invalid")
    left = haar_unitary(n, rng)
    right = haar_unitary(n, rng)
    r = rng.generator.uniform(sv_lo, sv_hi, size=n)
    return (left * r) @ dagger(right)


def uniform_weights(m: int) -> np.ndarray:
    """Equal weights ``1/m``."""
    if m < 1:
        raise BadRange("at least one weight is required")
    return np.full(m, 1.0 / m)


def dirichlet_weights(m: int, rng: RngState) -> np.ndarray:
    """Flat-Dirichlet weights: normalized i.i.d. exponentials."""
    if m < 1:
        raise BadRange("at least one weight is required")
    draws = rng.generator.standard_exponential(m)
    return draws / draws.sum()
