"""Validation helpers and the shared matrix JSON codec."""

# Standard Library
from typing import Any, Dict, Union

# Third Party
import numpy as np
import numpy.typing as npt
from pydantic import ValidationError

# Local Modules
from harnack_verifier.models import MatrixPayload
from harnack_verifier.utils.constants import MAX_ORDER, UNITARY_TOL
from harnack_verifier.utils.exceptions import (
    NotUnitary,
    ShapeMismatch,
    MatrixFormatError,
)

ComplexMatrix = npt.NDArray[np.complex128]
Spectrum = npt.NDArray[np.float64]
ComplexSpectrum = npt.NDArray[np.complex128]


def as_matrix(value: Any) -> ComplexMatrix:
    """Coerce ``value`` into a finite square complex128 matrix.

    Parameters
    ----------
    value : Any
        Array-like of shape (n, n) with 1 <= n <= 64.

    Returns
    -------
    ComplexMatrix
        A fresh complex128 array.

    Raises
    ------
    ShapeMismatch
        If the input is not square or exceeds the order cap.
    MatrixFormatError
        If any entry is NaN or infinite.
    """
    matrix = np.array(value, dtype=np.complex128)
    if matrix.ndim == 0:
        matrix = matrix.reshape(1, 1)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ShapeMismatch(f"expected a square matrix, got {matrix.shape}")
    if not 1 <= matrix.shape[0] <= MAX_ORDER:
        raise ShapeMismatch(
            f"matrix order {matrix.shape[0]} outside 1..{MAX_ORDER}"
        )
    if not np.all(np.isfinite(matrix)):
        raise MatrixFormatError("matrix entries must be finite")
    return matrix


def dagger(matrix: ComplexMatrix) -> ComplexMatrix:
    """Conjugate transpose."""
    return matrix.conj().T


def max_norm(matrix: np.ndarray) -> float:
    """Largest entry modulus, ``||.||_max``."""
    if matrix.size == 0:
        return 0.0
    return float(np.max(np.abs(matrix)))


def identity(n: int) -> ComplexMatrix:
    return np.eye(n, dtype=np.complex128)


def require_same_order(*matrices: ComplexMatrix) -> int:
    """Return the common order of ``matrices`` or raise ``ShapeMismatch``."""
    orders = {m.shape[0] for m in matrices}
    if len(orders) != 1:
        raise ShapeMismatch(f"matrices have different orders: {orders}")
    return orders.pop()


def is_hermitian(matrix: ComplexMatrix, tol: float) -> bool:
    """Check ``||h - h*||_max <= tol * (1 + ||h||_max)``."""
    return max_norm(matrix - dagger(matrix)) <= tol * (1 + max_norm(matrix))


def unitarity_residual(matrix: ComplexMatrix) -> float:
    """``||u* u - I||_max``."""
    return max_norm(dagger(matrix) @ matrix - identity(matrix.shape[0]))


def require_unitary(
    matrix: ComplexMatrix, tol: float = UNITARY_TOL
) -> ComplexMatrix:
    """Validate ``matrix`` as unitary within ``tol``.

    Raises
    ------
    NotUnitary
        If ``||u* u - I||_max > tol``.
    """
    matrix = as_matrix(matrix)
    residual = unitarity_residual(matrix)
    if residual > tol:
        raise NotUnitary(
            f"unitarity residual {residual:.3e} exceeds tolerance {tol:.1e}"
        )
    return matrix


def parse_matrix(payload: Union[str, bytes, Dict[str, Any]]) -> ComplexMatrix:
    """Decode the shared matrix JSON format.

    Parameters
    ----------
    payload : Union[str, bytes, Dict[str, Any]]
        A JSON document or an already-decoded object
        ``{"n": int, "entries": [[[re, im], ...], ...]}``.

    Returns
    -------
    ComplexMatrix
        The decoded matrix.

    Raises
    ------
    MatrixFormatError
        If the payload is malformed; the message names the offending field.
    """
    try:
        if isinstance(payload, (str, bytes)):
            model = MatrixPayload.model_validate_json(payload)
        else:
            model = MatrixPayload.model_validate(payload)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "matrix"
        raise MatrixFormatError(f"{location}: {first['msg']}") from e
    return as_matrix(model.to_array())


def serialize_matrix(matrix: ComplexMatrix) -> Dict[str, Any]:
    """Encode ``matrix`` in the shared matrix JSON format."""
    return MatrixPayload.from_array(as_matrix(matrix)).model_dump(mode="json")
