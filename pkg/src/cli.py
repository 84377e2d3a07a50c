#!/usr/bin/env python3
"""
Command-line interface for GHRS codes.

Exit status: 0 on success, 1 when a verification subcommand finds a
violation, 2 on malformed input. Results go to standard output; logs go to
standard error.
"""

import argparse
import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional

from src import __version__
from src.config import load_config
from src.custom_exceptions import GHRSError, HypothesisViolationError, VerificationError
from src.ghrs import (
    GeneratorForm,
    GHRSCode,
    evaluate,
    format_code_file,
    generator_matrix,
    mds_check,
    parity_check_matrix,
    parse_code_file,
)
from src.interp import dual_multiplier, verify_convolution_duality, verify_duality
from src.ldpc import (
    ExportFormat,
    export_graph,
    ldpc_condition,
    sparsity_certificate,
    sparsity_report,
    tanner_graph,
)
from src.logging_config import get_logger, setup_logging
from src.matspace import VectorOrder, format_matrix, nrt_weight, vectorize
from src.poly import parse_poly
from src.qc import is_quasi_cyclic, parse_qc_spec, qc_code, validate_qc_multiplier
from src.utils import format_key_values, format_vector, read_text, read_text_or_literal, yes_no

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2


@dataclass
class CommandResult:
    exit_status: int
    output: str
    error: str = ""


def _load_code(path: str) -> GHRSCode:
    return parse_code_file(read_text(path))


def _order(args: argparse.Namespace, config: Dict[str, Any]) -> VectorOrder:
    return VectorOrder(args.order or config["output"]["order"])


def cmd_encode(args: argparse.Namespace, config: Dict[str, Any]) -> CommandResult:
    code = _load_code(args.codefile)
    f = parse_poly(args.poly, code.field)
    A = evaluate(code, f)
    pairs = [
        ("row_major", format_vector(vectorize(A, VectorOrder.ROW_MAJOR))),
        ("col_major", format_vector(vectorize(A, VectorOrder.COL_MAJOR))),
        ("weight", nrt_weight(A)),
    ]
    if args.machine:
        return CommandResult(EXIT_OK, format_key_values(pairs))
    return CommandResult(EXIT_OK, format_matrix(A) + format_key_values(pairs))


def cmd_genmatrix(args: argparse.Namespace, config: Dict[str, Any]) -> CommandResult:
    code = _load_code(args.codefile)
    G = generator_matrix(code, _order(args, config), GeneratorForm(args.form))
    return CommandResult(EXIT_OK, format_matrix(G))


def cmd_paritycheck(args: argparse.Namespace, config: Dict[str, Any]) -> CommandResult:
    code = _load_code(args.codefile)
    return CommandResult(EXIT_OK,
                         format_matrix(parity_check_matrix(code, _order(args, config))))


def cmd_mindist(args: argparse.Namespace, config: Dict[str, Any]) -> CommandResult:
    code = _load_code(args.codefile)
    exhaustive = config["exhaustive"]
    report = mds_check(
        code,
        budget=args.budget or exhaustive["budget"],
        jobs=args.jobs or exhaustive["jobs"],
        projective=exhaustive["projective"],
    )
    status = EXIT_OK
    if report.hypothesis_satisfied and not report.is_mds:
        status = EXIT_VIOLATION
    if args.machine:
        return CommandResult(status, format_key_values([
            ("dimension", report.dimension),
            ("distance", report.distance),
            ("defect", report.singleton_defect),
            ("mds", yes_no(report.is_mds)),
        ]))
    lines = [
        f"d = {report.distance}, MDS: {yes_no(report.is_mds)}",
        f"dimension: {report.dimension}",
        f"singleton defect: {report.singleton_defect}",
    ]
    lines.extend(f"note: {note}" for note in report.notes)
    return CommandResult(status, "\n".join(lines) + "\n")


def cmd_dual(args: argparse.Namespace, config: Dict[str, Any]) -> CommandResult:
    code = _load_code(args.codefile)
    if code.t >= code.n:
        raise HypothesisViolationError("the dual of the full space is trivial")
    W = dual_multiplier(code.alpha, code.V)
    dual = GHRSCode(code.field, code.alpha, W, code.n - code.t)
    return CommandResult(EXIT_OK, format_code_file(dual))


def cmd_verify_duality(args: argparse.Namespace, config: Dict[str, Any]) -> CommandResult:
    code = _load_code(args.codefile)
    pointwise = verify_duality(code.alpha, code.V, code.t)
    pairs: List[Any] = [
        ("pointwise", "pass" if pointwise.passed else "fail"),
        ("orthogonal", yes_no(pointwise.orthogonal)),
        ("dimensions", f"{pointwise.v_dimension} + {pointwise.w_dimension}"),
        ("row_space_equal", yes_no(pointwise.row_space_equal)),
        ("w_all_nonzero", yes_no(pointwise.w_all_nonzero)),
    ]
    if pointwise.first_violation is not None:
        m, n = pointwise.first_violation
        pairs.append(("first_violation", f"x^{m} x^{n}"))
    if code.all_nonzero:
        convolution = verify_convolution_duality(code.alpha, code.V, code.t)
        pairs.append(("convolution", "pass" if convolution.passed else "fail"))
    status = EXIT_OK if pointwise.passed else EXIT_VIOLATION
    return CommandResult(status, format_key_values(pairs))


def cmd_sparsity(args: argparse.Namespace, config: Dict[str, Any]) -> CommandResult:
    code = _load_code(args.codefile)
    G = sparsity_report(generator_matrix(code))
    H = sparsity_report(parity_check_matrix(code))
    try:
        condition = ldpc_condition(code.r, code.s, code.t).value
        cert = sparsity_certificate(code)
        echelon_line = f"{cert.echelon.zeros}"
        bound = "n/a" if cert.bound is None else str(cert.bound)
        certified = yes_no(cert.certified)
        notes: List[str] = cert.notes
    except HypothesisViolationError:
        condition, echelon_line, bound, certified = "n/a", "n/a", "n/a", "n/a"
        notes = []
    if args.machine:
        return CommandResult(EXIT_OK, format_key_values([
            ("zeros", G.zeros),
            ("nonzeros", G.nonzeros),
            ("sparsity_pct", G.percent.rstrip("%")),
            ("h_zeros", H.zeros),
            ("h_nonzeros", H.nonzeros),
            ("h_sparsity_pct", H.percent.rstrip("%")),
            ("echelon_zeros", echelon_line),
            ("bound", bound),
            ("condition", condition),
            ("certified", certified),
        ]))
    lines = [
        f"G sparsity: {G.percent}",
        f"H sparsity: {H.percent}",
        f"echelon zeros: {echelon_line} (bound {bound})",
        f"LDPC condition: {condition}",
        f"certified: {certified}",
    ]
    lines.extend(f"note: {note}" for note in notes)
    return CommandResult(EXIT_OK, "\n".join(lines) + "\n")


def cmd_tanner(args: argparse.Namespace, config: Dict[str, Any]) -> CommandResult:
    code = _load_code(args.codefile)
    graph = tanner_graph(parity_check_matrix(code))
    return CommandResult(EXIT_OK, export_graph(graph, ExportFormat(args.format)))


def cmd_qc_check(args: argparse.Namespace, config: Dict[str, Any]) -> CommandResult:
    code = _load_code(args.codefile)
    closed = is_quasi_cyclic(code)
    pairs = [("qc", yes_no(closed))]
    if code.r >= 2:
        pairs.append(("ratio_condition", yes_no(validate_qc_multiplier(code.alpha[1], code.V))))
    return CommandResult(EXIT_OK if closed else EXIT_VIOLATION, format_key_values(pairs))


def cmd_qc_make(args: argparse.Namespace, config: Dict[str, Any]) -> CommandResult:
    spec, t = parse_qc_spec(read_text_or_literal(args.qcspec))
    return CommandResult(EXIT_OK, format_code_file(qc_code(spec, t)))


COMMANDS: Dict[str, Callable[[argparse.Namespace, Dict[str, Any]], CommandResult]] = {
    "encode": cmd_encode,
    "genmatrix": cmd_genmatrix,
    "paritycheck": cmd_paritycheck,
    "mindist": cmd_mindist,
    "dual": cmd_dual,
    "verify-duality": cmd_verify_duality,
    "sparsity": cmd_sparsity,
    "tanner": cmd_tanner,
    "qc-check": cmd_qc_check,
    "qc-make": cmd_qc_make,
}


def _subcommand_options() -> argparse.ArgumentParser:
    """Options accepted after the subcommand as well as before it."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true", default=argparse.SUPPRESS,
                        help="key: value output")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ghrs-codes", description="GHRS codes toolkit")
    parser.add_argument("-c", "--config", help="Path to config file")
    parser.add_argument("-v", "--verbose", action="store_true", help="Enable verbose logging")
    parser.add_argument("--machine", action="store_true", help="key: value output")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    common = [_subcommand_options()]

    encode = sub.add_parser("encode", help="Encode a polynomial", parents=common)
    encode.add_argument("codefile")
    encode.add_argument("--poly", required=True, help="Ascending coefficients, e.g. 1,0,2")

    for name, text in (("genmatrix", "Generator matrix"),
                       ("paritycheck", "RREF parity-check matrix")):
        p = sub.add_parser(name, help=text, parents=common)
        p.add_argument("codefile")
        p.add_argument("--order", choices=[o.value for o in VectorOrder])
        if name == "genmatrix":
            p.add_argument("--form", choices=[f.value for f in GeneratorForm], default="rref")

    mindist = sub.add_parser("mindist", help="Exhaustive minimum NRT distance", parents=common)
    mindist.add_argument("codefile")
    mindist.add_argument("--jobs", type=int, help="Worker threads")
    mindist.add_argument("--budget", type=int, help="Largest q^t to enumerate")

    for name, text in (("dual", "Dual multiplier code"),
                       ("verify-duality", "Check the duality identities"),
                       ("sparsity", "Sparsity of G and H"),
                       ("qc-check", "Closure under the column shift")):
        p = sub.add_parser(name, help=text, parents=common)
        p.add_argument("codefile")

    tanner = sub.add_parser("tanner", help="Tanner graph of H", parents=common)
    tanner.add_argument("codefile")
    tanner.add_argument("--format", choices=[f.value for f in ExportFormat], default="alist")

    qc_make = sub.add_parser("qc-make", help="Build a quasi-cyclic code", parents=common)
    qc_make.add_argument("qcspec", help="QC spec file or literal 'q, r, alpha, s, seed: ..., t'")
    return parser


def run(argv: Optional[List[str]] = None) -> CommandResult:
    """Parse ``argv`` and execute one subcommand."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return CommandResult(EXIT_OK if e.code == 0 else EXIT_INPUT, "")
    try:
        config = load_config(args.config)
        log = config["logging"]
        setup_logging("DEBUG" if args.verbose else log["level"], log["format"], log["file"])
        args.order = getattr(args, "order", None)
        return COMMANDS[args.command](args, config)
    except VerificationError as e:
        logger.error(str(e), context={"command": args.command})
        return CommandResult(EXIT_VIOLATION, "", f"error: {e}\n")
    except GHRSError as e:
        logger.error(str(e), context={"command": args.command})
        return CommandResult(EXIT_INPUT, "", f"error: {e}\n")


def main() -> None:
    result = run()
    sys.stdout.write(result.output)
    sys.stderr.write(result.error)
    sys.exit(result.exit_status)


if __name__ == "__main__":
    main()
