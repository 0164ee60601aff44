# Standard Library
import math
from typing import Any, Dict, List, Tuple, Union, Optional, Annotated

# Third Party
import numpy as np
from pydantic import (
    Field,
    BaseModel,
    ConfigDict,
    PlainSerializer,
    BeforeValidator,
    computed_field,
    model_validator,
)

# Local Modules
from harnack_verifier.utils import (
    Side,
    MatrixKind,
    WeightKind,
    EqualityFlag,
    InequalityName,
)
from harnack_verifier.utils.constants import MAX_ORDER, DEFAULT_TOP_K

INF_SYMBOL = "INF"


def _parse_extended(value: Any) -> Any:
    if value == INF_SYMBOL:
        return math.inf
    if value == f"-{INF_SYMBOL}":
        return -math.inf
    return value


def _dump_extended(value: float) -> Union[float, str]:
    if math.isinf(value):
        return INF_SYMBOL if value > 0 else f"-{INF_SYMBOL}"
    return value


# Real number or the symbol INF; JSON carries "INF" instead of a float infinity
ExtendedReal = Annotated[
    float,
    BeforeValidator(_parse_extended),
    PlainSerializer(_dump_extended, when_used="json"),
]


# --- Matrix Models ---
class MatrixPayload(BaseModel):
    """Shared matrix JSON format: ``{"n": int, "entries": [[[re, im], ...]]}``.

    Bare reals are accepted as shorthand for ``[re, 0]``.
    """

    model_config = ConfigDict(allow_inf_nan=False, frozen=True)

    n: int = Field(..., ge=1, le=MAX_ORDER, description="Matrix order")
    entries: List[List[Union[Tuple[float, float], float]]] = Field(
        ..., description="n rows of n [re, im] pairs"
    )

    @model_validator(mode="after")
    def check_square(self) -> "MatrixPayload":
        if len(self.entries) != self.n:
            raise ValueError(
                f"entries: expected {self.n} rows, got {len(self.entries)}"
            )
        for index, row in enumerate(self.entries):
            if len(row) != self.n:
                raise ValueError(
                    f"entries[{index}]: expected {self.n} values, "
                    f"got {len(row)}"
                )
        return self

    def to_array(self) -> np.ndarray:
        """Decode into a complex128 array."""
        out = np.empty((self.n, self.n), dtype=np.complex128)
        for i, row in enumerate(self.entries):
            for j, value in enumerate(row):
                if isinstance(value, tuple):
                    out[i, j] = complex(value[0], value[1])
                else:
                    out[i, j] = complex(value, 0.0)
        return out

    @classmethod
    def from_array(cls, matrix: np.ndarray) -> "MatrixPayload":
        """Encode a square array as ``[re, im]`` pairs."""
        matrix = np.asarray(matrix, dtype=np.complex128)
        entries = [
            [(float(v.real), float(v.imag)) for v in row] for row in matrix
        ]
        return cls(n=matrix.shape[0], entries=entries)


# --- Majorization Models ---
class MajorizationVerdict(BaseModel):
    """Outcome of a (log-)majorization prefix test."""

    model_config = ConfigDict(populate_by_name=True)

    holds: bool = Field(..., description="Whether the relation holds")
    failing_prefix: Optional[int] = Field(
        None, description="1-based prefix length of the first failure"
    )
    slack: float = Field(
        ..., description="Minimum prefix gap, negative when violated"
    )

    @model_validator(mode="after")
    def check_consistency(self) -> "MajorizationVerdict":
        if self.holds != (self.failing_prefix is None):
            raise ValueError("holds must be true iff failing_prefix is absent")
        return self


class LemmaReport(BaseModel):
    """Conclusions of the shift lemma or its reversal on one pair."""

    model_config = ConfigDict(populate_by_name=True)

    name: str = Field(..., description="lemma_shift or lemma_reverse")
    lhs: float = Field(..., description="Product over x")
    rhs: float = Field(..., description="Product over y")
    margin: float = Field(
        ..., description="Signed margin of the strict product inequality"
    )
    weak_log: Optional[MajorizationVerdict] = Field(
        None, description="Verdict of (1+x) weakly log-majorized by (1+y)"
    )
    log_majorized: Optional[bool] = Field(
        None,
        description="Whether (1+x) is log-majorized by (1+y); expected false",
    )
    holds: bool = Field(..., description="All conclusions verified")


class LewentReport(BaseModel):
    """Both sides of Lewent's inequality for one input."""

    model_config = ConfigDict(populate_by_name=True)

    lhs: float
    rhs: float
    equality: bool = Field(
        ..., description="All variables identical within tolerance"
    )
    holds: bool


class AdditivityReport(BaseModel):
    """Spectral additivity versus commutation of Hermitian summands."""

    model_config = ConfigDict(populate_by_name=True)

    additive: bool
    commuting: bool
    max_deviation: float = Field(
        ..., description="max |lambda(sum) - sum(lambda)|"
    )


# --- Inequality Models ---
class InequalityReport(BaseModel):
    """Structured verdict of one inequality evaluation."""

    model_config = ConfigDict(populate_by_name=True)

    name: InequalityName = Field(..., description="Verifier identifier")
    lower: Optional[ExtendedReal] = Field(None, description="Lower bound")
    mid: ExtendedReal = Field(..., description="Bounded quantity")
    upper: Optional[ExtendedReal] = Field(None, description="Upper bound")
    holds_lower: bool = True
    holds_upper: bool = True
    slack_lower: Optional[ExtendedReal] = Field(
        None, description="mid - lower; negative beyond tolerance = violation"
    )
    slack_upper: Optional[ExtendedReal] = Field(
        None, description="upper - mid; negative beyond tolerance = violation"
    )
    equality_flags: List[EqualityFlag] = Field(
        default_factory=lambda: [EqualityFlag.none]
    )
    notes: str = ""
    asserted: List[Side] = Field(
        default_factory=list,
        description="Sides backed by a theorem for this verifier",
    )
    skipped: List[Side] = Field(
        default_factory=list,
        description="Sides whose hypothesis did not apply to the input",
    )
    subchecks: Dict[str, bool] = Field(
        default_factory=dict, description="Named auxiliary verdicts"
    )
    tolerances: Dict[str, float] = Field(
        default_factory=dict, description="Thresholds used for this report"
    )

    @computed_field
    @property
    def passed(self) -> bool:
        """True when every asserted side and every subcheck holds."""
        sides = {
            Side.lower: self.holds_lower,
            Side.upper: self.holds_upper,
        }
        return all(sides[side] for side in self.asserted) and all(
            self.subchecks.values()
        )


class ChainReport(BaseModel):
    """Intermediate products of the multi-matrix proof chain."""

    model_config = ConfigDict(populate_by_name=True)

    combined_product: float = Field(
        ..., description="prod (1+s_k)/(1-s_k) over eigenvalues of W"
    )
    averaged_product: float = Field(
        ..., description="prod over k of the averaged eigenvalue ratio"
    )
    weighted_product: float = Field(
        ..., description="prod_k prod_i ((1+r_ik)/(1-r_ik))^w_i"
    )
    fan: MajorizationVerdict
    ordered: bool
    all_equal: bool


class BoundsReport(BaseModel):
    """Singular values and the two Harnack bound products."""

    model_config = ConfigDict(populate_by_name=True)

    singular_values: List[float]
    lower: ExtendedReal
    upper: ExtendedReal


class ReproReport(BaseModel):
    """Reproduction of the published two-by-two counterexample."""

    model_config = ConfigDict(populate_by_name=True)

    lower: float
    mid: float
    lower_rounded: float
    mid_rounded: float
    lower_match: bool
    mid_match: bool
    backstop_match: bool
    lower_exceeds_mid: bool
    report: InequalityReport

    @computed_field
    @property
    def passed(self) -> bool:
        return self.lower_match and self.mid_match and self.backstop_match


# --- Search Models ---
PSD_INEQUALITIES = {InequalityName.psd, InequalityName.multi}
# Verifiers that reject inputs with a singular value of at least one
CONTRACTION_INEQUALITIES = {
    InequalityName.tung,
    InequalityName.corollary,
    InequalityName.conjecture,
    InequalityName.conjecture_lower,
    InequalityName.conjecture_upper,
}


class SearchConfig(BaseModel):
    """Seeded Monte-Carlo trial plan."""

    model_config = ConfigDict(populate_by_name=True, frozen=True)

    inequality: InequalityName
    n: int = Field(2, ge=1, le=MAX_ORDER)
    m: int = Field(2, ge=1)
    trials: int = Field(1000, ge=1)
    seed: int = Field(..., ge=0, lt=2**64)
    eig_lo: float = Field(0.0, ge=0.0, lt=1.0)
    eig_hi: float = Field(0.95, ge=0.0, lt=1.0)
    sv_max: float = Field(
        3.0, gt=0.0, description="Singular value cap for the general kind"
    )
    matrix_kind: MatrixKind = MatrixKind.psd
    weight_kind: WeightKind = WeightKind.uniform
    top_k: int = Field(DEFAULT_TOP_K, ge=0)
    workers: int = Field(
        1, ge=1, exclude=True, description="Fan-out degree, not serialized"
    )

    @model_validator(mode="after")
    def check_plan(self) -> "SearchConfig":
        if self.eig_lo > self.eig_hi:
            raise ValueError("eig_lo must not exceed eig_hi")
        if (
            self.inequality in PSD_INEQUALITIES
            and self.matrix_kind != MatrixKind.psd
        ):
            raise ValueError(
                f"{self.inequality.value} requires matrix_kind=psd"
            )
        if (
            self.inequality in CONTRACTION_INEQUALITIES
            and self.matrix_kind == MatrixKind.general
        ):
            raise ValueError(
                f"{self.inequality.value} requires strict contractions, "
                "not matrix_kind=general"
            )
        if self.inequality == InequalityName.paper_counterexample:
            raise ValueError("paper-counterexample takes no sampled input")
        return self


class TrialInputs(BaseModel):
    """Everything needed to replay one trial."""

    model_config = ConfigDict(populate_by_name=True)

    matrices: List[MatrixPayload]
    weights: List[float]
    unitary: MatrixPayload


class TrialRecord(BaseModel):
    """One evaluated trial kept as a violation or a tightest case."""

    model_config = ConfigDict(populate_by_name=True)

    trial_index: int
    slack: ExtendedReal = Field(
        ..., description="Minimum relative slack over the judged sides"
    )
    report: InequalityReport
    inputs: TrialInputs


class SearchStats(BaseModel):
    """Aggregate statistics of a search run."""

    model_config = ConfigDict(populate_by_name=True)

    trials: int
    violations: int
    min_slack: Optional[ExtendedReal] = None
    mean_slack: Optional[ExtendedReal] = None
    elapsed_seconds: float = Field(
        0.0, exclude=True, description="Wall time; logged, not serialized"
    )


class SearchOutcome(BaseModel):
    """Violations, tightest cases and statistics of a search run."""

    model_config = ConfigDict(populate_by_name=True)

    config: SearchConfig
    header: Dict[str, str] = Field(default_factory=dict)
    label: str = ""
    violations: List[TrialRecord] = Field(default_factory=list)
    tightest: List[TrialRecord] = Field(default_factory=list)
    stats: SearchStats
