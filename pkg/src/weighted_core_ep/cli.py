"""The ``wcep`` command.

Subcommands::

    wcep compute --kind core-ep --matrix A.json --weight-e E.json --out X.json
    wcep verify --kind core-ep --matrix A.json --candidate X.json --weight-e E.json
    wcep index --matrix A.json
    wcep paper-examples [--backend float]

Exit codes: 0 success, 1 internal error, 2 input error, 3 invalid weight,
4 the inverse does not exist, 5 verification failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from weighted_core_ep.classical import (
    drazin,
    group_inverse,
    moore_penrose,
    one_four_f,
    one_three_e,
    weighted_mp,
)
from weighted_core_ep.config import WcepConfig
from weighted_core_ep.core_ep import (
    core_ep,
    dual_core_ep,
    weighted_core,
    weighted_dual_core,
)
from weighted_core_ep.exceptions import ExitCode, WcepError, exit_code_for
from weighted_core_ep.linalg import index, require_square
from weighted_core_ep.matrix import Backend, Matrix, Tolerance
from weighted_core_ep.results import InverseKind, InverseResult, NoExist
from weighted_core_ep.schemas import (
    Certificate,
    MatrixFile,
    load_matrix_file,
    write_certificate,
    write_matrix_file,
)
from weighted_core_ep.star import dual_core_ep_star, star_core_ep
from weighted_core_ep.verify import certify, ensure_certified
from weighted_core_ep.weights import Weight, weight_or_identity
from weighted_core_ep.worked_examples import run_worked_examples

logger = logging.getLogger(__name__)

__all__ = ["build_parser", "compute_inverse", "main", "run"]


def compute_inverse(
    kind: InverseKind | str,
    a: Matrix,
    *,
    e: Weight | None = None,
    f: Weight | None = None,
    tol: Tolerance | None = None,
) -> InverseResult | NoExist:
    """Compute the inverse of ``kind`` and certify it.

    Missing weights default to the identity.
    """
    kind = InverseKind(kind)
    tol = tol or Tolerance.for_backend(a.backend)
    e = weight_or_identity(e, a.rows, a.backend)
    f = weight_or_identity(f, a.cols, a.backend)

    if kind is InverseKind.CORE_EP_E:
        return core_ep(a, e, tol)
    if kind is InverseKind.DUAL_CORE_EP_F:
        return dual_core_ep(a, f, tol)

    value: Matrix | NoExist
    if kind is InverseKind.MOORE_PENROSE:
        value = moore_penrose(a, tol)
    elif kind is InverseKind.DRAZIN:
        value = drazin(a, tol)
    elif kind is InverseKind.GROUP:
        value = group_inverse(a, tol)
    elif kind is InverseKind.ONE_THREE_E:
        value = one_three_e(a, e, tol)
    elif kind is InverseKind.ONE_FOUR_F:
        value = one_four_f(a, f, tol)
    elif kind is InverseKind.WEIGHTED_MP:
        value = weighted_mp(a, e, f, tol)
    elif kind is InverseKind.WEIGHTED_CORE:
        value = weighted_core(a, e, tol)
    elif kind is InverseKind.WEIGHTED_DUAL_CORE:
        value = weighted_dual_core(a, f, tol)
    elif kind is InverseKind.STAR_CORE_EP:
        value = star_core_ep(a, e, tol)
    else:
        value = dual_core_ep_star(a, f, tol)

    if isinstance(value, NoExist):
        return value
    k = index(a, tol) if a.is_square else 0
    report = certify(a, value, kind, e=e, f=f, k=k, tol=tol)
    return InverseResult(value=value, kind=kind, report=report, index_used=k)


# Argument handling


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wcep",
        description="Weighted core-EP and related generalized inverses.",
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="log at DEBUG level"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--backend",
            choices=[b.value for b in Backend],
            default=None,
            help="scalar backend (default: WCEP_BACKEND or exact)",
        )
        p.add_argument(
            "--tol",
            type=float,
            default=None,
            help="float residual tolerance (default: WCEP_TOL or 1e-9)",
        )
        p.add_argument("--json", action="store_true", help="print JSON")

    def add_inputs(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--kind",
            required=True,
            choices=[k.value for k in InverseKind],
        )
        p.add_argument("--matrix", required=True, type=Path)
        p.add_argument("--weight-e", type=Path, default=None)
        p.add_argument("--weight-f", type=Path, default=None)

    compute = sub.add_parser("compute", help="compute an inverse")
    add_inputs(compute)
    add_common(compute)
    compute.add_argument(
        "--out",
        type=Path,
        default=None,
        help="output matrix file; the certificate goes to OUT.cert.json",
    )

    verify = sub.add_parser("verify", help="check a candidate inverse")
    add_inputs(verify)
    add_common(verify)
    verify.add_argument("--candidate", required=True, type=Path)

    idx = sub.add_parser("index", help="print the index of a square matrix")
    idx.add_argument("--matrix", required=True, type=Path)
    add_common(idx)

    worked = sub.add_parser(
        "paper-examples",
        aliases=["worked-examples"],
        help="recompute the two worked examples",
    )
    add_common(worked)
    worked.add_argument(
        "--corrupt-golden", action="store_true", help=argparse.SUPPRESS
    )
    return parser


def _config(args: argparse.Namespace) -> WcepConfig:
    overrides: dict[str, object] = {}
    if args.backend is not None:
        overrides["backend"] = args.backend
    if args.tol is not None:
        overrides["tol"] = args.tol
    return WcepConfig(**overrides)  # type: ignore[arg-type]


def _load(path: Path, backend: Backend) -> Matrix:
    return load_matrix_file(path).to_matrix(backend)


def _weight(
    path: Path | None, backend: Backend, tol: Tolerance, name: str
) -> Weight | None:
    if path is None:
        return None
    return Weight.validate(_load(path, backend), tol, name)


# Commands


def _cmd_compute(args: argparse.Namespace, config: WcepConfig) -> int:
    backend = config.backend
    tol = config.tolerance(backend)
    a = _load(args.matrix, backend)
    e = _weight(args.weight_e, backend, tol, "E")
    f = _weight(args.weight_f, backend, tol, "F")
    result = compute_inverse(args.kind, a, e=e, f=f, tol=tol)
    if isinstance(result, NoExist):
        print(f"no {args.kind} inverse: {result.reason}", file=sys.stderr)
        return ExitCode.NO_EXIST
    ensure_certified(result.report, f"{args.kind} inverse")
    logger.info("Computed %s inverse of a %dx%d matrix", args.kind, *a.shape)
    certificate = Certificate.from_result(result)
    if args.out is None:
        sys.stdout.write(MatrixFile.from_matrix(result.value).dumps())
        if not args.json:
            print(result.report.table(), file=sys.stderr)
        return ExitCode.OK
    write_matrix_file(args.out, result.value)
    sidecar = write_certificate(args.out, certificate)
    if args.json:
        print(certificate.model_dump_json(indent=2))
    else:
        print(f"wrote {args.out} and {sidecar}")
    return ExitCode.OK


def _cmd_verify(args: argparse.Namespace, config: WcepConfig) -> int:
    backend = config.backend
    tol = config.tolerance(backend)
    a = _load(args.matrix, backend)
    x = _load(args.candidate, backend)
    e = _weight(args.weight_e, backend, tol, "E")
    f = _weight(args.weight_f, backend, tol, "F")
    report = certify(a, x, InverseKind(args.kind), e=e, f=f, tol=tol)
    if args.json:
        print(report.model_dump_json(indent=2))
    else:
        print(report.table())
    logger.info("Verification of %s: %s", args.kind, report.passed)
    return ExitCode.OK if report.passed else ExitCode.VERIFICATION_FAILED


def _cmd_index(args: argparse.Namespace, config: WcepConfig) -> int:
    backend = config.backend
    a = _load(args.matrix, backend)
    require_square(a)
    k = index(a, config.tolerance(backend))
    print(json.dumps({"index": k}) if args.json else k)
    return ExitCode.OK


def _cmd_worked_examples(args: argparse.Namespace, config: WcepConfig) -> int:
    backend = config.backend
    tol = None if args.tol is None else config.tolerance(backend)
    comparisons = run_worked_examples(backend, tol, corrupt=args.corrupt_golden)
    if args.json:
        print(json.dumps([c.model_dump() for c in comparisons], indent=2))
    else:
        width = max(len(c.name) for c in comparisons)
        for c in comparisons:
            status = "ok" if c.passed else "FAIL"
            print(f"{c.name:<{width}}  {c.residual:>10.3g}  {status}")
    passed = all(c.passed for c in comparisons)
    return ExitCode.OK if passed else ExitCode.VERIFICATION_FAILED


_COMMANDS = {
    "compute": _cmd_compute,
    "verify": _cmd_verify,
    "index": _cmd_index,
    "paper-examples": _cmd_worked_examples,
    "worked-examples": _cmd_worked_examples,
}


def main(argv: Sequence[str] | None = None) -> int:
    """Run ``wcep`` with ``argv`` and return the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ExitCode.INPUT_ERROR
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else config.log_level.upper()
    )
    try:
        return int(_COMMANDS[args.command](args, config))
    except WcepError as exc:
        code = exit_code_for(exc)
        print(f"error: {exc}", file=sys.stderr)
        return int(code)


def run() -> None:
    """Console script entry point."""
    sys.exit(main())
