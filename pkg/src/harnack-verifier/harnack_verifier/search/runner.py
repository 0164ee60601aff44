"""Seeded Monte-Carlo search for violations of the inequalities."""

# Standard Library
import math
import time
import heapq
from typing import Dict, List, Tuple, Callable, Sequence, NamedTuple
from concurrent.futures import ProcessPoolExecutor

# Local Modules
from harnack_verifier.linalg import (
    ComplexMatrix,
    parse_matrix,
    serialize_matrix,
)
from harnack_verifier.models import (
    SearchStats,
    TrialInputs,
    TrialRecord,
    SearchConfig,
    MatrixPayload,
    SearchOutcome,
    InequalityReport,
)
from harnack_verifier.utils import (
    Side,
    InequalityName,
    get_logger,
    relative_slack,
)
from harnack_verifier.inequalities import (
    EnsembleSpec,
    probe_tung,
    verify_psd,
    verify_tung,
    verify_multi,
    verify_marcus,
    conjecture_eval,
    verify_corollary,
    verify_general_lower,
)
from harnack_verifier.utils.constants import VIOLATION_RTOL
from harnack_verifier.utils.exceptions import UnknownInequality
from harnack_verifier.search.sampling import (
    RNG_DESCRIPTION,
    UNITARY_DISTRIBUTION,
    WEIGHT_DISTRIBUTIONS,
    MATRIX_DISTRIBUTIONS,
    sample_instance,
    derive_trial_rng,
)

# Initialize logger
logger = get_logger(service="harnack_verifier.search.runner")

Evaluator = Callable[[EnsembleSpec, ComplexMatrix], InequalityReport]

EVALUATORS: Dict[InequalityName, Evaluator] = {
    InequalityName.tung: lambda ens, u: verify_tung(ens.matrices[0], u),
    InequalityName.tung_probe: lambda ens, u: probe_tung(ens.matrices[0], u),
    InequalityName.marcus: lambda ens, u: verify_marcus(ens.matrices[0]),
    InequalityName.general_lower: lambda ens, u: verify_general_lower(
        ens.matrices[0], u
    ),
    InequalityName.psd: lambda ens, u: verify_psd(ens.matrices[0], u),
    InequalityName.multi: verify_multi,
    InequalityName.corollary: lambda ens, u: verify_corollary(
        ens.matrices, ens.weights, u
    ),
    InequalityName.conjecture: lambda ens, u: conjecture_eval(
        ens.matrices, ens.weights
    ),
    InequalityName.conjecture_lower: lambda ens, u: conjecture_eval(
        ens.matrices, ens.weights
    ),
    InequalityName.conjecture_upper: lambda ens, u: conjecture_eval(
        ens.matrices, ens.weights
    ),
}

# Sides judged regardless of what the evaluator asserts
JUDGED_OVERRIDES: Dict[InequalityName, List[Side]] = {
    InequalityName.tung_probe: [Side.lower, Side.upper],
    InequalityName.conjecture: [Side.lower, Side.upper],
    InequalityName.conjecture_lower: [Side.lower],
    InequalityName.conjecture_upper: [Side.upper],
}

ALIASES: Dict[str, InequalityName] = {
    "verify_tung": InequalityName.tung,
    "probe_tung": InequalityName.tung_probe,
    "verify_marcus": InequalityName.marcus,
    "verify_general_lower": InequalityName.general_lower,
    "verify_psd": InequalityName.psd,
    "verify_multi": InequalityName.multi,
    "verify_corollary": InequalityName.corollary,
    "conjecture_eval": InequalityName.conjecture,
}

CONJECTURE_LABEL = (
    "numerical evidence for an open conjecture, not a proof; sampling "
    "distributions are recorded in the header"
)
THEOREM_LABEL = "theorem-backed; any violation indicates a numerical defect"
PROBE_LABEL = "exploratory; the bounds are not implied for these inputs"

LABELS: Dict[InequalityName, str] = {
    InequalityName.tung_probe: PROBE_LABEL,
    InequalityName.conjecture: CONJECTURE_LABEL,
    InequalityName.conjecture_lower: CONJECTURE_LABEL,
    InequalityName.conjecture_upper: CONJECTURE_LABEL,
}


class ChunkResult(NamedTuple):
    """Evaluated slice ``[start, stop)`` of the trial range."""

    slacks: List[float]
    violations: List[TrialRecord]
    tightest: List[TrialRecord]


def resolve_inequality(name: str) -> InequalityName:
    """Map an identifier or verifier alias to a searchable inequality.

    Raises
    ------
    UnknownInequality
        If the name is neither an identifier nor an alias, or names an
        inequality that takes no sampled input.
    """
    try:
        resolved = ALIASES.get(name) or InequalityName(name)
    except ValueError as e:
        raise UnknownInequality(f"unknown inequality {name!r}") from e
    if resolved not in EVALUATORS:
        raise UnknownInequality(f"{resolved.value} cannot be searched")
    return resolved


def judged_sides(
    name: InequalityName, report: InequalityReport
) -> List[Side]:
    """Sides a search judges for ``name``."""
    return JUDGED_OVERRIDES.get(name, report.asserted)


def trial_slack(report: InequalityReport, sides: Sequence[Side]) -> float:
    """Smallest relative slack over ``sides``; ``inf`` when none apply."""
    slacks = []
    for side in sides:
        if side == Side.lower and report.slack_lower is not None:
            slacks.append(
                relative_slack(report.slack_lower, report.lower, report.mid)
            )
        if side == Side.upper and report.slack_upper is not None:
            slacks.append(
                relative_slack(report.slack_upper, report.upper, report.mid)
            )
    return min(slacks, default=math.inf)


def _record(
    index: int,
    slack: float,
    report: InequalityReport,
    ens: EnsembleSpec,
    u: ComplexMatrix,
) -> TrialRecord:
    return TrialRecord(
        trial_index=index,
        slack=slack,
        report=report,
        inputs=TrialInputs(
            matrices=[serialize_matrix(z) for z in ens.matrices],
            weights=[float(w) for w in ens.weights],
            unitary=serialize_matrix(u),
        ),
    )


def _run_chunk(cfg: SearchConfig, start: int, stop: int) -> ChunkResult:
    """Evaluate trials ``start..stop-1``; keeps the chunk's own top-k."""
    name = resolve_inequality(cfg.inequality.value)
    evaluate = EVALUATORS[name]
    slacks: List[float] = []
    violations: List[TrialRecord] = []
    # Max-heap on (slack, index) through negated keys
    heap: List[Tuple[float, int, TrialRecord]] = []
    for index in range(start, stop):
        ens, u = sample_instance(cfg, derive_trial_rng(cfg.seed, index))
        report = evaluate(ens, u)
        slack = trial_slack(report, judged_sides(name, report))
        slacks.append(slack)
        is_violation = slack < -VIOLATION_RTOL
        enters_heap = cfg.top_k > 0 and (
            len(heap) < cfg.top_k or (-slack, -index) > heap[0][:2]
        )
        if not (is_violation or enters_heap):
            continue
        record = _record(index, slack, report, ens, u)
        if is_violation:
            violations.append(record)
        if enters_heap:
            entry = (-slack, -index, record)
            if len(heap) < cfg.top_k:
                heapq.heappush(heap, entry)
            else:
                heapq.heapreplace(heap, entry)
    logger.info(
        "Search chunk evaluated",
        extra={"start": start, "stop": stop, "violations": len(violations)},
    )
    tightest = [record for _, _, record in heap]
    return ChunkResult(slacks, violations, tightest)


def _chunk_bounds(trials: int, workers: int) -> List[Tuple[int, int]]:
    chunks = max(1, min(workers, trials))
    size = math.ceil(trials / chunks)
    return [(s, min(s + size, trials)) for s in range(0, trials, size)]


def _header(cfg: SearchConfig) -> Dict[str, str]:
    return {
        "matrices": MATRIX_DISTRIBUTIONS[cfg.matrix_kind],
        "weights": WEIGHT_DISTRIBUTIONS[cfg.weight_kind],
        "unitary": UNITARY_DISTRIBUTION,
        "rng": RNG_DESCRIPTION,
        "violation": f"relative slack below -{VIOLATION_RTOL:g}",
    }


def run_search(cfg: SearchConfig) -> SearchOutcome:
    """Evaluate ``cfg.trials`` sampled instances of one inequality.

    Trials are split into contiguous chunks across ``cfg.workers``
    processes and merged by trial index, so the outcome does not depend on
    the degree of parallelism.

    Raises
    ------
    UnknownInequality
        If the configured inequality cannot be searched.
    """
    name = resolve_inequality(cfg.inequality.value)
    logger.append_keys(inequality=name.value, seed=cfg.seed)
    logger.info(
        "Starting search",
        extra={"trials": cfg.trials, "workers": cfg.workers},
    )
    started = time.perf_counter()
    bounds = _chunk_bounds(cfg.trials, cfg.workers)
    if len(bounds) == 1:
        results = [_run_chunk(cfg, *bounds[0])]
    else:
        with ProcessPoolExecutor(max_workers=len(bounds)) as pool:
            results = list(
                pool.map(
                    _run_chunk,
                    [cfg] * len(bounds),
                    [start for start, _ in bounds],
                    [stop for _, stop in bounds],
                )
            )

    slacks = [slack for result in results for slack in result.slacks]
    violations = sorted(
        (v for result in results for v in result.violations),
        key=lambda record: record.trial_index,
    )
    tightest = sorted(
        (t for result in results for t in result.tightest),
        key=lambda record: (record.slack, record.trial_index),
    )[: cfg.top_k]
    finite = [slack for slack in slacks if math.isfinite(slack)]
    elapsed = time.perf_counter() - started
    logger.info(
        "Search finished",
        extra={"violations": len(violations), "elapsed_seconds": elapsed},
    )
    return SearchOutcome(
        config=cfg,
        header=_header(cfg),
        label=LABELS.get(name, THEOREM_LABEL),
        violations=violations,
        tightest=tightest,
        stats=SearchStats(
            trials=len(slacks),
            violations=len(violations),
            min_slack=min(slacks, default=None),
            mean_slack=math.fsum(finite) / len(finite) if finite else None,
            elapsed_seconds=elapsed,
        ),
    )


def _payload_matrix(payload: MatrixPayload) -> ComplexMatrix:
    return parse_matrix(payload.model_dump())


def replay_violation(
    cfg: SearchConfig, record: TrialRecord
) -> InequalityReport:
    """Re-evaluate a recorded trial from its serialized inputs alone."""
    name = resolve_inequality(cfg.inequality.value)
    ens = EnsembleSpec.of(
        [_payload_matrix(m) for m in record.inputs.matrices],
        record.inputs.weights,
    )
    return EVALUATORS[name](ens, _payload_matrix(record.inputs.unitary))
