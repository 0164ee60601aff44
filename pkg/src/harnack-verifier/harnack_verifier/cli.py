"""Command-line front end.

Every command prints one JSON document on stdout (or to ``--output``) and
logs to stderr. Exit codes: 0 when everything asserted holds, 1 on a
violation or finding, 2 on invalid input.
"""

# Standard Library
import sys
import json
import argparse
from typing import Any, Dict, List, Optional, Sequence
from pathlib import Path

# Third Party
from pydantic import ValidationError

# Local Modules
from harnack_verifier.linalg import (
    RngState,
    ComplexMatrix,
    identity,
    svd_values,
    haar_unitary,
    parse_matrix,
)
from harnack_verifier.models import (
    BoundsReport,
    SearchConfig,
    InequalityReport,
)
from harnack_verifier.search import run_search, resolve_inequality
from harnack_verifier.utils import (
    MatrixKind,
    WeightKind,
    InequalityName,
    get_logger,
)
from harnack_verifier.inequalities import (
    probe_tung,
    verify_psd,
    verify_tung,
    EnsembleSpec,
    verify_multi,
    verify_marcus,
    harnack_bounds,
    conjecture_eval,
    verify_corollary,
    verify_general_lower,
    reproduce_counterexample,
)
from harnack_verifier.utils.constants import (
    DEFAULT_SEED,
    DEFAULT_TOP_K,
    DEFAULT_WORKERS,
)
from harnack_verifier.utils.exceptions import (
    BadRange,
    HarnackError,
    LengthMismatch,
)

# Initialize logger
logger = get_logger(service="harnack_verifier.cli")

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT_ERROR = 2

SINGLE_MATRIX_THEOREMS = {
    InequalityName.tung,
    InequalityName.tung_probe,
    InequalityName.marcus,
    InequalityName.general_lower,
    InequalityName.psd,
}
# Nothing is asserted; any side that fails is reported as a finding
EXPLORATORY_THEOREMS = {InequalityName.tung_probe, InequalityName.conjecture}
VERIFY_THEOREMS = [
    InequalityName.tung,
    InequalityName.tung_probe,
    InequalityName.marcus,
    InequalityName.general_lower,
    InequalityName.psd,
    InequalityName.multi,
    InequalityName.corollary,
    InequalityName.conjecture,
]


def _emit(payload: Dict[str, Any], output: Optional[Path]) -> None:
    """Write a JSON document to ``output`` or stdout."""
    text = json.dumps(payload, indent=2, sort_keys=True)
    if output is None:
        print(text)
    else:
        output.write_text(text + "\n", encoding="utf-8")
        logger.info("Wrote report", extra={"path": str(output)})


def _read_matrix(path: str) -> ComplexMatrix:
    try:
        return parse_matrix(Path(path).read_text(encoding="utf-8"))
    except HarnackError as e:
        # Prefix the file so the diagnostic names where the field lives
        raise type(e)(f"{path}: {e}") from e


def _parse_unitary(source: str, n: int) -> ComplexMatrix:
    """Resolve ``identity``, ``neg-identity``, ``haar:SEED`` or a file."""
    if source == "identity":
        return identity(n)
    if source == "neg-identity":
        return -identity(n)
    if source.startswith("haar:"):
        try:
            seed = int(source.split(":", 1)[1])
        except ValueError as e:
            raise BadRange(f"--unitary: bad seed in {source!r}") from e
        return haar_unitary(n, RngState(seed, 0))
    return _read_matrix(source)


def _parse_weights(text: Optional[str], m: int) -> List[float]:
    if text is None:
        return [1.0 / m] * m
    try:
        return [float(part) for part in text.split(",")]
    except ValueError as e:
        raise BadRange(f"--weights: cannot parse {text!r}") from e


def _evaluate(args: argparse.Namespace) -> InequalityReport:
    theorem = InequalityName(args.theorem)
    matrices = [_read_matrix(path) for path in args.matrices]
    if theorem in SINGLE_MATRIX_THEOREMS and len(matrices) != 1:
        raise LengthMismatch(
            f"--theorem {theorem.value} takes one matrix, "
            f"got {len(matrices)}"
        )
    z = matrices[0]
    if theorem == InequalityName.marcus:
        return verify_marcus(z)
    u = _parse_unitary(args.unitary, z.shape[0])
    single = {
        InequalityName.tung: verify_tung,
        InequalityName.tung_probe: probe_tung,
        InequalityName.general_lower: verify_general_lower,
        InequalityName.psd: verify_psd,
    }
    if theorem in single:
        return single[theorem](z, u)
    weights = _parse_weights(args.weights, len(matrices))
    if theorem == InequalityName.multi:
        return verify_multi(EnsembleSpec.of(matrices, weights), u)
    if theorem == InequalityName.corollary:
        return verify_corollary(matrices, weights, u)
    return conjecture_eval(matrices, weights)


def _finding_notes(report: InequalityReport) -> str:
    failing = [
        side
        for side, holds in (
            ("lower", report.holds_lower),
            ("upper", report.holds_upper),
        )
        if not holds
    ]
    finding = f"finding: {' and '.join(failing)} bound fails"
    return "; ".join(part for part in (report.notes, finding) if part)


def cmd_verify(args: argparse.Namespace) -> int:
    """Evaluate one inequality on matrices read from files."""
    report = _evaluate(args)
    finding = report.name in EXPLORATORY_THEOREMS and not (
        report.holds_lower and report.holds_upper
    )
    if finding:
        report = report.model_copy(update={"notes": _finding_notes(report)})
    _emit(report.model_dump(mode="json"), args.output)
    if finding:
        logger.warning(
            "Finding: a bound fails for these inputs",
            extra={
                "holds_lower": report.holds_lower,
                "holds_upper": report.holds_upper,
            },
        )
        return EXIT_VIOLATION
    if report.name in EXPLORATORY_THEOREMS:
        return EXIT_OK
    if not report.passed:
        logger.warning("Violation of an asserted bound")
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    """Print singular values and the two bound products of one matrix."""
    r = svd_values(_read_matrix(args.matrix))
    lower, upper = harnack_bounds(r)
    report = BoundsReport(
        singular_values=[float(v) for v in r], lower=lower, upper=upper
    )
    _emit(report.model_dump(mode="json"), args.output)
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    """Run a seeded search and report violations and tightest cases."""
    cfg = SearchConfig(
        inequality=resolve_inequality(args.inequality),
        n=args.n,
        m=args.m,
        trials=args.trials,
        seed=args.seed,
        eig_lo=args.eig_lo,
        eig_hi=args.eig_hi,
        sv_max=args.sv_max,
        matrix_kind=args.kind,
        weight_kind=args.weights_kind,
        top_k=args.top_k,
        workers=args.workers,
    )
    outcome = run_search(cfg)
    _emit(outcome.model_dump(mode="json"), args.output)
    return EXIT_VIOLATION if outcome.violations else EXIT_OK


def cmd_repro(args: argparse.Namespace) -> int:
    """Reproduce the published counterexample numbers."""
    report = reproduce_counterexample()
    _emit(report.model_dump(mode="json"), args.output)
    if not report.passed:
        logger.error(
            "Counterexample numbers not reproduced",
            extra={"lower": report.lower, "mid": report.mid},
        )
        return EXIT_VIOLATION
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harnack-verifier",
        description=(
            "Numerical verification of Harnack-type determinantal "
            "inequalities for contractive matrices."
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  harnack-verifier verify --theorem psd z.json --unitary identity
  harnack-verifier bounds z.json
  harnack-verifier search --inequality psd --trials 1000 --seed 7
  harnack-verifier repro
""",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_output(sub: argparse.ArgumentParser) -> None:
        sub.add_argument(
            "--output", type=Path, help="Write the JSON document here"
        )

    verify_parser = subparsers.add_parser(
        "verify", help="Evaluate one inequality"
    )
    verify_parser.add_argument(
        "matrices", nargs="+", help="Matrix JSON files"
    )
    verify_parser.add_argument(
        "--theorem",
        required=True,
        choices=[name.value for name in VERIFY_THEOREMS],
    )
    verify_parser.add_argument(
        "--unitary",
        default="identity",
        help="identity, neg-identity, haar:SEED or a matrix JSON file",
    )
    verify_parser.add_argument(
        "--weights", help="Comma-separated weights (default: uniform)"
    )
    add_output(verify_parser)
    verify_parser.set_defaults(handler=cmd_verify)

    bounds_parser = subparsers.add_parser(
        "bounds", help="Singular values and bound products"
    )
    bounds_parser.add_argument("matrix", help="Matrix JSON file")
    add_output(bounds_parser)
    bounds_parser.set_defaults(handler=cmd_bounds)

    search_parser = subparsers.add_parser(
        "search", help="Seeded Monte-Carlo search"
    )
    search_parser.add_argument("--inequality", required=True)
    search_parser.add_argument("--n", type=int, default=2)
    search_parser.add_argument("--m", type=int, default=2)
    search_parser.add_argument("--trials", type=int, default=1000)
    search_parser.add_argument(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help="Overrides HARNACK_DEFAULT_SEED",
    )
    search_parser.add_argument(
        "--kind",
        default=MatrixKind.psd.value,
        choices=[kind.value for kind in MatrixKind],
    )
    search_parser.add_argument(
        "--weights-kind",
        default=WeightKind.uniform.value,
        choices=[kind.value for kind in WeightKind],
    )
    search_parser.add_argument("--eig-lo", type=float, default=0.0)
    search_parser.add_argument("--eig-hi", type=float, default=0.95)
    search_parser.add_argument("--sv-max", type=float, default=3.0)
    search_parser.add_argument("--top-k", type=int, default=DEFAULT_TOP_K)
    search_parser.add_argument(
        "--workers",
        type=int,
        default=DEFAULT_WORKERS,
        help="Overrides HARNACK_SEARCH_WORKERS",
    )
    add_output(search_parser)
    search_parser.set_defaults(handler=cmd_search)

    repro_parser = subparsers.add_parser(
        "repro", help="Reproduce the published counterexample"
    )
    add_output(repro_parser)
    repro_parser.set_defaults(handler=cmd_repro)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, dispatch, and map errors to exit codes."""
    args = build_parser().parse_args(argv)
    logger.append_keys(command=args.command)
    try:
        return args.handler(args)
    except HarnackError as e:
        logger.error("Invalid input", extra={"code": e.code})
        print(f"error: {e.code}: {e}", file=sys.stderr)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "config"
        logger.error("Invalid configuration", extra={"field": location})
        print(
            f"error: InvalidConfig: {location}: {first['msg']}",
            file=sys.stderr,
        )
    except OSError as e:
        logger.error("Cannot read input", extra={"error": str(e)})
        print(f"error: InputError: {e}", file=sys.stderr)
    return EXIT_INPUT_ERROR
