"""Command line front end: order checks, range sieves, row verification,
exhaustive searches.

All reports go to stdout and are deterministic for identical inputs
(timing_ms aside); diagnostics go to stderr. Exit codes: 0 for a computed
verdict, 2 for usage or parse errors, 3 for NOT_APPLICABLE, 4 when an
internal guard such as the sieve cap trips.
"""

import argparse
import csv
import json
import math
import os
import sys
import time

from ._bitmask import available_parallelism
from .barker import search_barker
from .circulant import (SignRow, is_circulant_hadamard,
                        periodic_autocorrelation, search_all, spectrum)
from .criterion import (DEFAULT_SIEVE_CAP, CriterionReport, Verdict,
                        WitnessRecord, check_order, iter_sieve)
from .errors import LengthTooLarge, OrderTooLarge, RangeTooLarge

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NOT_APPLICABLE = 3
EXIT_GUARD = 4

# Largest odd u with 4u^2 still below 2^63, the arithmetic input ceiling.
_MAX_SIEVE_BOUND = math.isqrt((1 << 63) // 4 - 1)


def _order_arg(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not 1 <= value < 1 << 63:
        raise argparse.ArgumentTypeError("n must be a positive integer below 2^63")
    return value


def _sieve_bound_arg(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not 1 <= value <= _MAX_SIEVE_BOUND:
        raise argparse.ArgumentTypeError(
            f"bound must keep n = 4u^2 below 2^63 (1 <= u <= {_MAX_SIEVE_BOUND})")
    return value


def _row_arg(text: str) -> str:
    if not text or set(text) - {"+", "-"}:
        raise argparse.ArgumentTypeError("row literal must match [+-]+")
    return text


def _threads_arg(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("thread count must be at least 1")
    return value


def _witness_dict(w: WitnessRecord) -> dict:
    return {"p": w.p, "a": w.a, "m": w.m, "order": w.order,
            "parity": w.parity, "j_index": w.j_index}


def _report_dict(report: CriterionReport) -> dict:
    doc = {
        "n": report.n,
        "applicable": report.applicable,
        "witnesses": [_witness_dict(w) for w in report.witnesses],
        "verdict": report.verdict.value,
        "rejection_primes": list(report.rejection_primes),
    }
    if report.annotation is not None:
        doc["annotation"] = report.annotation
    return doc


def _spectrum_dict(report) -> dict:
    return {
        "eigenvalues": [[b.real, b.imag] for b in report.eigenvalues],
        "magnitudes": list(report.magnitudes),
        "max_deviation": report.max_deviation,
        "root_convention": report.root_convention,
    }


def _emit_envelope(command: str, input_echo: dict, result: dict,
                   started: float) -> None:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "input": input_echo,
        "result": result,
        "timing_ms": int((time.perf_counter() - started) * 1000),
    }
    print(json.dumps(doc, indent=2))


def _cmd_check(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    report = check_order(args.n)
    _emit_envelope("check", {"n": args.n}, _report_dict(report), started)
    if report.verdict is Verdict.NOT_APPLICABLE:
        return EXIT_NOT_APPLICABLE
    return EXIT_OK


def _cmd_verify_row(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    row = SignRow.from_literal(args.row)
    result = {
        "literal": row.literal(),
        "n": row.n,
        "hadamard": is_circulant_hadamard(row),
        "paf": [periodic_autocorrelation(row, k) for k in range(row.n)],
        "spectrum": _spectrum_dict(spectrum(row)),
    }
    _emit_envelope("verify-row", {"row": row.literal()}, result, started)
    return EXIT_OK


def _cmd_sieve(args: argparse.Namespace) -> int:
    cap = DEFAULT_SIEVE_CAP
    raw_cap = os.environ.get("RYSER_SIEVE_CAP")
    if raw_cap is not None:
        try:
            cap = int(raw_cap, 10)
        except ValueError:
            print(f"ryser: invalid RYSER_SIEVE_CAP value {raw_cap!r}",
                  file=sys.stderr)
            return EXIT_USAGE
    try:
        reports = iter_sieve(args.u_min, args.u_max, cap=cap,
                             workers=args.threads)
    except RangeTooLarge as exc:
        print(f"ryser: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ValueError as exc:
        print(f"ryser: {exc}", file=sys.stderr)
        return EXIT_USAGE

    counts = {Verdict.REJECTED.value: 0, Verdict.NOT_DECIDED.value: 0}
    survivors = []
    writer = None
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["u", "n", "verdict", "rejection_primes", "witnesses"])
    for report in reports:
        u = math.isqrt(report.n // 4)
        counts[report.verdict.value] += 1
        if report.verdict is Verdict.NOT_DECIDED:
            survivors.append(u)
        if writer is not None:
            writer.writerow([
                u, report.n, report.verdict.value,
                ";".join(str(p) for p in report.rejection_primes),
                ";".join(f"{w.p}:{w.m}:{w.order}" for w in report.witnesses),
            ])
        else:
            record = {
                "u": u,
                "n": report.n,
                "verdict": report.verdict.value,
                "rejection_primes": list(report.rejection_primes),
                "witnesses": [_witness_dict(w) for w in report.witnesses],
            }
            print(json.dumps(record))
    total = sum(counts.values())
    summary = {"total": total, "counts": counts, "survivors": survivors}
    if writer is None:
        print(json.dumps({"summary": summary}))
    else:
        joined = " ".join(str(u) for u in survivors) or "none"
        print(f"# total {total}; rejected {counts[Verdict.REJECTED.value]}; "
              f"not decided {counts[Verdict.NOT_DECIDED.value]}; "
              f"survivors: {joined}", file=sys.stderr)
    return EXIT_OK


def _cmd_search(args: argparse.Namespace) -> int:
    try:
        if args.kind == "circulant":
            rows = search_all(args.size, workers=args.threads)
        else:
            rows = search_barker(args.size, workers=args.threads)
    except (OrderTooLarge, LengthTooLarge) as exc:
        print(f"ryser: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for row in rows:
        print(row.literal())
    print(f"count {len(rows)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ryser",
        description="Screen integer orders for circulant Hadamard matrices, "
                    "verify candidate rows, and run desk-scale exhaustive "
                    "searches.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser(
        "check", help="apply the order rejection criterion to one n")
    p_check.add_argument("n", type=_order_arg)
    p_check.set_defaults(handler=_cmd_check)

    p_sieve = sub.add_parser(
        "sieve", help="criterion reports for n = 4u^2 over a range of odd u")
    p_sieve.add_argument("u_min", type=_sieve_bound_arg)
    p_sieve.add_argument("u_max", type=_sieve_bound_arg)
    p_sieve.add_argument("--format", choices=("json-lines", "csv"),
                         default="json-lines")
    p_sieve.add_argument("--threads", type=_threads_arg, default=None,
                         help="worker count (default: available parallelism)")
    p_sieve.set_defaults(handler=_cmd_sieve)

    p_verify = sub.add_parser(
        "verify-row",
        help="exact and spectral Hadamard checks for one '+'/'-' row literal")
    p_verify.add_argument("row", type=_row_arg)
    p_verify.set_defaults(handler=_cmd_verify_row)

    p_search = sub.add_parser(
        "search", help="exhaustive circulant Hadamard or Barker search")
    p_search.add_argument("kind", choices=("circulant", "barker"))
    p_search.add_argument("size", type=int)
    p_search.add_argument("--threads", type=_threads_arg, default=None,
                          help="worker count (default: available parallelism)")
    p_search.set_defaults(handler=_cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if hasattr(args, "threads") and args.threads is None:
        args.threads = available_parallelism()
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
