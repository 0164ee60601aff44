"""Verifiers for the Harnack-type determinantal inequalities.

Every verifier validates its hypotheses, evaluates the bounds and the
bounded quantity, and returns an :class:`InequalityReport`. Hypothesis
failures raise; bounds that fail to hold are reported, never raised.
"""

# Standard Library
from typing import Dict, List, Optional, Sequence

# Third Party
import numpy as np

# Local Modules
from harnack_verifier.linalg import (
    ComplexMatrix,
    polar,
    dagger,
    det_lu,
    identity,
    max_norm,
    as_matrix,
    abs_matrix,
    svd_values,
    is_hermitian,
    eig_hermitian,
    require_unitary,
    require_same_order,
)
from harnack_verifier.models import ChainReport, InequalityReport
from harnack_verifier.utils import Side, EqualityFlag, InequalityName
from harnack_verifier.majorization import majorizes_add
from harnack_verifier.utils.constants import (
    PSD_TOL,
    REPORT_RTOL,
    NONSINGULAR_TOL,
    UNITARY_SIGN_TOL,
    ENSEMBLE_EQUAL_TOL,
    EIGENVALUE_ONE_TOL,
    SPECTRUM_MATCH_TOL,
    OPERATOR_CONVEXITY_TOL,
)
from harnack_verifier.utils.exceptions import (
    NotPSD,
    SingularHypothesis,
    NotStrictContraction,
    StrictContractionRequired,
)
from harnack_verifier.inequalities.bounds import (
    judge_sides,
    tung_ratio,
    harnack_bounds,
    weighted_bounds,
    determinant_ratio,
)
from harnack_verifier.inequalities.ensemble import EnsembleSpec
from harnack_verifier.inequalities.equality import (
    merge_flags,
    classify_equality,
)

BOTH_SIDES = [Side.lower, Side.upper]

# Thresholds echoed in every report
REPORT_TOLERANCES: Dict[str, float] = {
    "report_rtol": REPORT_RTOL,
    "spectrum_match": SPECTRUM_MATCH_TOL,
    "unitary_sign": UNITARY_SIGN_TOL,
    "eigenvalue_one": EIGENVALUE_ONE_TOL,
}


def build_report(
    name: InequalityName,
    lower: Optional[float],
    mid: float,
    upper: Optional[float],
    asserted: Sequence[Side],
    skipped: Sequence[Side] = (),
    flags: Optional[List[EqualityFlag]] = None,
    notes: str = "",
    subchecks: Optional[Dict[str, bool]] = None,
    tolerances: Optional[Dict[str, float]] = None,
) -> InequalityReport:
    """Judge the bounds and assemble a report."""
    return InequalityReport(
        name=name,
        lower=lower,
        mid=mid,
        upper=upper,
        equality_flags=merge_flags(flags or []),
        notes=notes,
        asserted=list(asserted),
        skipped=list(skipped),
        subchecks=subchecks or {},
        tolerances={**REPORT_TOLERANCES, **(tolerances or {})},
        **judge_sides(lower, mid, upper),
    )


def psd_spectrum(z: ComplexMatrix, label: str = "z") -> np.ndarray:
    """Descending spectrum of a positive semidefinite matrix.

    Raises
    ------
    NotPSD
        If ``z`` is not Hermitian within ``1e-9`` or has an eigenvalue below
        ``-1e-9 * (1 + ||z||_max)``.
    """
    if not is_hermitian(z, PSD_TOL):
        raise NotPSD(f"{label} is not Hermitian")
    eigenvalues, _ = eig_hermitian((z + dagger(z)) / 2)
    if eigenvalues[-1] < -PSD_TOL * (1.0 + max_norm(z)):
        raise NotPSD(
            f"{label} has negative eigenvalue {eigenvalues[-1]:.3e}"
        )
    return np.clip(eigenvalues, 0.0, None)


def _strict_singular_values(
    zs: Sequence[ComplexMatrix],
) -> List[np.ndarray]:
    spectra = []
    for i, z in enumerate(zs):
        r = svd_values(z)
        if r[0] >= 1.0:
            raise NotStrictContraction(
                f"matrices[{i}] has largest singular value {r[0]:.6g} >= 1"
            )
        spectra.append(r)
    return spectra


def verify_tung(z: ComplexMatrix, u: ComplexMatrix) -> InequalityReport:
    """Two-sided Harnack bound for a strict contraction.

    ``prod (1-r)/(1+r) <= det(I - Z*Z) / |det(I - UZ)|^2 <=
    prod (1+r)/(1-r)`` over the singular values ``r`` of ``z``.

    Raises
    ------
    StrictContractionRequired
        If the largest singular value of ``z`` is at least one.
    NotUnitary
        If ``u`` is not unitary.
    """
    z = as_matrix(z)
    u = require_unitary(u)
    require_same_order(z, u)
    r = svd_values(z)
    if r[0] >= 1.0:
        raise StrictContractionRequired(
            f"largest singular value {r[0]:.6g} is not below 1"
        )
    lower, upper = harnack_bounds(r)
    # Z = V P reduces the pair (Z, U) to (P, UV)
    factors = polar(z)
    return build_report(
        InequalityName.tung,
        lower,
        tung_ratio(z, u),
        upper,
        asserted=BOTH_SIDES,
        flags=classify_equality(factors.p, u @ factors.v, eigenvalues=r),
    )


def probe_tung(z: ComplexMatrix, u: ComplexMatrix) -> InequalityReport:
    """Evaluate the strict-contraction bounds for an arbitrary ``z``.

    Nothing is asserted: outside the contraction hypothesis the bounds may
    fail, for instance ``z = 2i I`` of odd order with ``u = I``.
    """
    z = as_matrix(z)
    u = require_unitary(u)
    require_same_order(z, u)
    r = svd_values(z)
    lower, upper = harnack_bounds(r)
    notes = ""
    if r[0] >= 1.0:
        notes = "z is not a strict contraction; bounds are not implied"
    return build_report(
        InequalityName.tung_probe,
        lower,
        tung_ratio(z, u),
        upper,
        asserted=[],
        notes=notes,
    )


def verify_marcus(a: ComplexMatrix) -> InequalityReport:
    """``prod (1 - r) <= |det(I - A)| <= prod (1 + r)``.

    The upper product bounds ``|det(I - A)|`` for every square ``a``; the
    lower one is asserted only when ``a`` is a strict contraction and is
    reported as skipped otherwise.
    """
    a = as_matrix(a)
    r = svd_values(a)
    lower = float(np.prod(1.0 - r))
    upper = float(np.prod(1.0 + r))
    mid = abs(det_lu(identity(a.shape[0]) - a))
    if r[0] < 1.0:
        asserted, skipped, notes = BOTH_SIDES, [], ""
    else:
        asserted, skipped = [Side.upper], [Side.lower]
        notes = "lower bound skipped: a is not a strict contraction"
    # A = V |A|; SpecPosMatch marks lower equality, SpecNegMatch upper
    factors = polar(a)
    flags = classify_equality(factors.p, factors.v, eigenvalues=r)
    notes = "; ".join(
        part
        for part in (
            notes,
            "SpecPosMatch marks lower equality and SpecNegMatch upper "
            "equality through the polar factors of a",
        )
        if part
    )
    return build_report(
        InequalityName.marcus,
        lower,
        mid,
        upper,
        asserted=asserted,
        skipped=skipped,
        flags=flags,
        notes=notes,
    )


def verify_general_lower(
    z: ComplexMatrix, u: ComplexMatrix
) -> InequalityReport:
    """``prod |1-r|/(1+r) <= |det(I - Z*Z)| / |det(I - UZ)|^2`` for any ``z``.

    A vanishing denominator gives ``inf``, which satisfies the bound.
    """
    z = as_matrix(z)
    u = require_unitary(u)
    n = require_same_order(z, u)
    lower, _ = harnack_bounds(svd_values(z), absolute=True)
    eye = identity(n)
    mid = determinant_ratio(
        det_lu(eye - dagger(z) @ z), det_lu(eye - u @ z), modulus=True
    )
    return build_report(
        InequalityName.general_lower,
        lower,
        mid,
        None,
        asserted=[Side.lower],
    )


def _psd_strictness_notes(
    eigenvalues: np.ndarray, flags: List[EqualityFlag]
) -> str:
    nonsingular = eigenvalues[-1] > EIGENVALUE_ONE_TOL
    notes = []
    if (
        nonsingular
        and EqualityFlag.eigenvalue_one not in flags
        and EqualityFlag.u_is_neg_identity not in flags
    ):
        notes.append("lower inequality is strict")
    if nonsingular and EqualityFlag.u_is_identity not in flags:
        notes.append("upper inequality is strict")
    return "; ".join(notes)


def verify_psd(z: ComplexMatrix, u: ComplexMatrix) -> InequalityReport:
    """Harnack bounds for positive semidefinite ``z`` with ``I - UZ``
    nonsingular.

    ``prod |1-r|/(1+r) <= |det(I - Z^2)| / |det(I - UZ)|^2`` holds for every
    such ``z``; the upper bound ``prod (1+r)/(1-r)`` is asserted only when
    every eigenvalue is below one.

    Raises
    ------
    NotPSD
        If ``z`` is not Hermitian positive semidefinite.
    NotUnitary
        If ``u`` is not unitary.
    SingularHypothesis
        If ``|det(I - UZ)| <= 1e-12``.
    """
    z = as_matrix(z)
    u = require_unitary(u)
    n = require_same_order(z, u)
    r = psd_spectrum(z)
    eye = identity(n)
    denominator = det_lu(eye - u @ z)
    if abs(denominator) <= NONSINGULAR_TOL:
        raise SingularHypothesis(
            f"|det(I - UZ)| = {abs(denominator):.3e} is numerically zero"
        )
    mid = determinant_ratio(det_lu(eye - z @ z), denominator, modulus=True)
    lower, upper = harnack_bounds(r, absolute=True)
    skipped = []
    if r[0] >= 1.0:
        upper = None
        skipped = [Side.upper]
    flags = classify_equality(z, u, eigenvalues=r)
    return build_report(
        InequalityName.psd,
        lower,
        mid,
        upper,
        asserted=[Side.lower] if skipped else BOTH_SIDES,
        skipped=skipped,
        flags=flags,
        notes=_psd_strictness_notes(r, flags),
    )


def _strict_psd_spectra(ens: EnsembleSpec) -> List[np.ndarray]:
    spectra = []
    for i, z in enumerate(ens.matrices):
        r = psd_spectrum(z, label=f"matrices[{i}]")
        if r[0] >= 1.0:
            raise NotStrictContraction(
                f"matrices[{i}] has eigenvalue {r[0]:.6g} >= 1"
            )
        spectra.append(r)
    return spectra


def verify_multi(ens: EnsembleSpec, u: ComplexMatrix) -> InequalityReport:
    """Weighted multi-matrix bounds for positive semidefinite contractions.

    With ``W = sum w_i Z_i``, ``det(I - W^2) / |det(I - UW)|^2`` lies between
    ``prod_i prod_k ((1 -+ r_ik)/(1 +- r_ik)) ** w_i``. A single matrix
    reproduces :func:`verify_psd`.

    Raises
    ------
    NotPSD
        If some ``Z_i`` is not positive semidefinite.
    NotStrictContraction
        If some ``Z_i`` has an eigenvalue of at least one.
    NotUnitary
        If ``u`` is not unitary.
    """
    u = require_unitary(u)
    require_same_order(ens.matrices[0], u)
    spectra = _strict_psd_spectra(ens)
    lower, upper = weighted_bounds(spectra, ens.weights)
    w = ens.mean
    eye = identity(ens.n)
    mid = determinant_ratio(
        det_lu(eye - w @ w), det_lu(eye - u @ w), modulus=True
    )
    flags = classify_equality(w, u)
    if ens.all_equal(ENSEMBLE_EQUAL_TOL):
        flags = merge_flags(flags, [EqualityFlag.all_ensemble_equal])
    return build_report(
        InequalityName.multi,
        lower,
        mid,
        upper,
        asserted=BOTH_SIDES,
        flags=flags,
        tolerances={"ensemble_equal": ENSEMBLE_EQUAL_TOL},
    )


def multi_proof_chain(ens: EnsembleSpec) -> ChainReport:
    """Intermediate products of the multi-matrix argument.

    With ``s`` the spectrum of ``W`` and ``t_k = sum_i w_i r_ik`` (each
    spectrum descending), ``prod (1+s)/(1-s) <= prod (1+t)/(1-t) <=
    prod_i prod_k ((1+r_ik)/(1-r_ik)) ** w_i``; the first link follows from
    ``s`` being majorized by ``t`` and the second from Lewent's inequality.
    """
    spectra = _strict_psd_spectra(ens)
    s = psd_spectrum(ens.mean, label="W")
    t = np.sum([w * r for w, r in zip(ens.weights, spectra)], axis=0)
    combined = float(np.prod((1.0 + s) / (1.0 - s)))
    averaged = float(np.prod((1.0 + t) / (1.0 - t)))
    _, weighted = weighted_bounds(spectra, ens.weights)
    slack = 1.0 + REPORT_RTOL
    return ChainReport(
        combined_product=combined,
        averaged_product=averaged,
        weighted_product=weighted,
        fan=majorizes_add(s, t, weak=False),
        ordered=combined <= averaged * slack and averaged <= weighted * slack,
        all_equal=ens.all_equal(ENSEMBLE_EQUAL_TOL),
    )


def verify_corollary(
    zs: Sequence[ComplexMatrix],
    w: Sequence[float],
    u: ComplexMatrix,
) -> InequalityReport:
    """Upper bound for general strict contractions through ``|Z_i|``.

    ``det(I - sum w_i Z_i* Z_i) / |det(I - U sum w_i |Z_i|)|^2 <=
    prod_i prod_k ((1+r_ik)/(1-r_ik)) ** w_i``. The mirrored lower product
    is evaluated but not asserted. The operator step
    ``(sum w_i |Z_i|)^2 <= sum w_i |Z_i|^2`` is checked as a subcheck.

    Raises
    ------
    NotStrictContraction
        If some ``Z_i`` has a singular value of at least one.
    NotUnitary
        If ``u`` is not unitary.
    WeightError
        If the weights are invalid.
    """
    ens = EnsembleSpec.of(zs, w)
    u = require_unitary(u)
    n = require_same_order(ens.matrices[0], u)
    spectra = _strict_singular_values(ens.matrices)
    lower, upper = weighted_bounds(spectra, ens.weights)
    moduli = [abs_matrix(z) for z in ens.matrices]
    s = ens.combine(moduli)
    q = ens.combine([dagger(z) @ z for z in ens.matrices])
    eye = identity(n)
    mid = determinant_ratio(det_lu(eye - q), det_lu(eye - u @ s))

    gap = s @ s - q
    top, _ = eig_hermitian((gap + dagger(gap)) / 2)
    convex = bool(top[0] <= OPERATOR_CONVEXITY_TOL)

    flags = classify_equality(s, u)
    if ens.all_equal(ENSEMBLE_EQUAL_TOL, moduli):
        flags = merge_flags(flags, [EqualityFlag.all_ensemble_equal])
    return build_report(
        InequalityName.corollary,
        lower,
        mid,
        upper,
        asserted=[Side.upper],
        flags=flags,
        notes="lower product is reported for comparison and not asserted",
        subchecks={"operator_convexity": convex},
        tolerances={
            "ensemble_equal": ENSEMBLE_EQUAL_TOL,
            "operator_convexity": OPERATOR_CONVEXITY_TOL,
        },
    )


def conjecture_eval(
    zs: Sequence[ComplexMatrix], w: Sequence[float]
) -> InequalityReport:
    """Evaluate the open two-sided weighted bound without asserting it.

    ``det(I - sum w_i Z_i* Z_i) / |det(I - sum w_i Z_i)|^2`` is compared with
    the weighted bound products. The lower side is false in general and
    the upper side is open, so violations are findings.

    Raises
    ------
    NotStrictContraction
        If some ``Z_i`` has a singular value of at least one.
    """
    ens = EnsembleSpec.of(zs, w)
    spectra = _strict_singular_values(ens.matrices)
    lower, upper = weighted_bounds(spectra, ens.weights)
    q = ens.combine([dagger(z) @ z for z in ens.matrices])
    eye = identity(ens.n)
    mid = determinant_ratio(det_lu(eye - q), det_lu(eye - ens.mean))
    flags = []
    if ens.all_equal(ENSEMBLE_EQUAL_TOL):
        flags = [EqualityFlag.all_ensemble_equal]
    return build_report(
        InequalityName.conjecture,
        lower,
        mid,
        upper,
        asserted=[],
        flags=flags,
        notes="evaluated as evidence; neither side is asserted",
        tolerances={"ensemble_equal": ENSEMBLE_EQUAL_TOL},
    )
