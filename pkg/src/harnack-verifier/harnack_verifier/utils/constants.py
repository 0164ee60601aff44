"""Tolerances, thresholds and environment-driven defaults.

Every numerical threshold used by the kernels, predicates and verifiers is
named here so that reports can echo the exact values they were judged with.
"""

# Standard Library
import os

# Matrix order cap for every kernel
MAX_ORDER = 64

# core-linalg
HERMITIAN_TOL = 1e-10
JACOBI_OFF_TOL = 1e-14
JACOBI_MAX_SWEEPS = 64
QR_ITERATIONS_PER_EIGENVALUE = 100
EIG_CLAMP_TOL = 1e-12
UNITARY_TOL = 1e-8
SINGULAR_DET_TOL = 1e-300

# majorization
MAJORIZATION_TOL = 1e-10
LOG_MAJORIZATION_TOL = 1e-9
PERMUTATION_TOL = 1e-12
WEIGHT_SUM_TOL = 1e-12
LEWENT_TOL = 1e-12
LEWENT_EQUALITY_SPREAD = 1e-10
ADDITIVITY_TOL = 1e-9

# inequalities
REPORT_RTOL = 1e-9
SPECTRUM_MATCH_TOL = 1e-7
UNITARY_SIGN_TOL = 1e-8
EIGENVALUE_ONE_TOL = 1e-9
UNIT_SINGULAR_TOL = 1e-12
PSD_TOL = 1e-9
NONSINGULAR_TOL = 1e-12
ENSEMBLE_EQUAL_TOL = 1e-9
OPERATOR_CONVEXITY_TOL = 1e-9
PAPER_BACKSTOP_TOL = 5e-4

# search
VIOLATION_RTOL = 1e-9
DEFAULT_TOP_K = 10

# Environment defaults, overridden by explicit CLI flags
DEFAULT_SEED = int(os.environ.get("HARNACK_DEFAULT_SEED", "7"))
DEFAULT_WORKERS = int(os.environ.get("HARNACK_SEARCH_WORKERS", "1"))
