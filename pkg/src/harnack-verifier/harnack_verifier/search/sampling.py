"""Per-trial random streams and instance sampling."""

# Standard Library
from typing import Dict, Tuple

# Local Modules
from harnack_verifier.linalg import (
    RngState,
    ComplexMatrix,
    haar_unitary,
    uniform_weights,
    dirichlet_weights,
    random_contraction,
    random_psd_contraction,
)
from harnack_verifier.models import SearchConfig
from harnack_verifier.utils import MatrixKind, WeightKind
from harnack_verifier.inequalities import EnsembleSpec

# Human-readable sampling distributions, recorded in every outcome header
MATRIX_DISTRIBUTIONS: Dict[MatrixKind, str] = {
    MatrixKind.psd: (
        "Q diag(r) Q* with Q Haar and r_k i.i.d. uniform on [eig_lo, eig_hi)"
    ),
    MatrixKind.general_contraction: (
        "U1 diag(r) U2* with U1, U2 Haar and r_k i.i.d. uniform on "
        "[eig_lo, eig_hi)"
    ),
    MatrixKind.polar_shifted: (
        "U0 P_i with one shared Haar U0 and P_i = Q diag(r) Q* as for psd"
    ),
    MatrixKind.general: (
        "U1 diag(r) U2* with U1, U2 Haar and r_k i.i.d. uniform on "
        "[0, sv_max)"
    ),
}
WEIGHT_DISTRIBUTIONS: Dict[WeightKind, str] = {
    WeightKind.uniform: "w_i = 1/m",
    WeightKind.dirichlet_flat: "normalized i.i.d. standard exponentials",
}
UNITARY_DISTRIBUTION = (
    "Haar: QR of a complex Ginibre matrix with the phases of diag(R) removed"
)
RNG_DESCRIPTION = (
    "numpy Philox keyed by SeedSequence(entropy=seed, spawn_key=(trial,))"
)


def derive_trial_rng(seed: int, trial_index: int) -> RngState:
    """Independent stream for one trial; stream index is the trial index."""
    return RngState(seed, trial_index)


def sample_instance(
    cfg: SearchConfig, rng: RngState
) -> Tuple[EnsembleSpec, ComplexMatrix]:
    """Draw one ensemble and a Haar unitary.

    Draws happen in a fixed order (shared unitary for the polar-shifted
    kind, the ``m`` matrices, the weights, then ``u``) so a trial is fully
    determined by its stream.
    """
    n, m = cfg.n, cfg.m
    if cfg.matrix_kind == MatrixKind.psd:
        matrices = [
            random_psd_contraction(n, rng, cfg.eig_lo, cfg.eig_hi)
            for _ in range(m)
        ]
    elif cfg.matrix_kind == MatrixKind.general_contraction:
        matrices = [
            random_contraction(n, rng, cfg.eig_lo, cfg.eig_hi)
            for _ in range(m)
        ]
    elif cfg.matrix_kind == MatrixKind.polar_shifted:
        shared = haar_unitary(n, rng)
        matrices = [
            shared @ random_psd_contraction(n, rng, cfg.eig_lo, cfg.eig_hi)
            for _ in range(m)
        ]
    else:
        matrices = [
            random_contraction(n, rng, 0.0, cfg.sv_max) for _ in range(m)
        ]

    if cfg.weight_kind == WeightKind.dirichlet_flat:
        weights = dirichlet_weights(m, rng)
    else:
        weights = uniform_weights(m)
    u = haar_unitary(n, rng)
    return EnsembleSpec.of(matrices, weights), u
