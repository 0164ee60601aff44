# Standard Library
from enum import Enum


class EqualityFlag(str, Enum):
    eigenvalue_one = "EigenvalueOne"
    spec_neg_match = "SpecNegMatch"
    spec_pos_match = "SpecPosMatch"
    all_ensemble_equal = "AllEnsembleEqual"
    u_is_identity = "UIsIdentity"
    u_is_neg_identity = "UIsNegIdentity"
    none = "None"


class InequalityName(str, Enum):
    tung = "tung"
    tung_probe = "tung-probe"
    marcus = "marcus"
    general_lower = "general-lower"
    psd = "psd"
    multi = "multi"
    corollary = "corollary"
    conjecture = "conjecture"
    conjecture_lower = "conjecture-lower"
    conjecture_upper = "conjecture-upper"
    paper_counterexample = "paper-counterexample"


class MatrixKind(str, Enum):
    psd = "psd"
    general_contraction = "general-contraction"
    polar_shifted = "polar-shifted"
    general = "general"


class WeightKind(str, Enum):
    uniform = "uniform"
    dirichlet_flat = "dirichlet-flat"


class Side(str, Enum):
    lower = "lower"
    upper = "upper"
