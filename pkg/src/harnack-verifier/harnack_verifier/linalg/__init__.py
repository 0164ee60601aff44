"""Dense complex linear algebra for small square matrices.

This module provides matrix validation and the shared matrix JSON codec, the
determinant, eigenvalue, singular value and polar kernels, and seeded
sampling of Haar unitaries, contractions and weight vectors.
"""

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
    parse_matrix,
    require_unitary,
    serialize_matrix,
    require_same_order,
    unitarity_residual,
)
from harnack_verifier.linalg.random import (
    RngState,
    haar_unitary,
    uniform_weights,
    dirichlet_weights,
    random_contraction,
    random_psd_contraction,
)
from harnack_verifier.linalg.kernels import (
    PolarFactors,
    polar,
    det_lu,
    svd_full,
    abs_matrix,
    svd_values,
    eig_general,
    eig_hermitian,
    sort_spectrum,
    spec_multiset_equal,
)

__all__ = [
    "Spectrum",
    "ComplexMatrix",
    "ComplexSpectrum",
    "dagger",
    "identity",
    "max_norm",
    "as_matrix",
    "is_hermitian",
    "parse_matrix",
    "require_unitary",
    "serialize_matrix",
    "require_same_order",
    "unitarity_residual",
    "RngState",
    "haar_unitary",
    "uniform_weights",
    "dirichlet_weights",
    "random_contraction",
    "random_psd_contraction",
    "PolarFactors",
    "polar",
    "det_lu",
    "svd_full",
    "abs_matrix",
    "svd_values",
    "eig_general",
    "eig_hermitian",
    "sort_spectrum",
    "spec_multiset_equal",
]
