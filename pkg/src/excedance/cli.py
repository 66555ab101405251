"""Command-line surface: sequence dumps, excedance distribution tables,
series printing, and the claim verification report.

Exit codes: 0 on success (for ``verify``: every verdict matches its
expectation), 1 when ``verify`` finds an unexpected verdict or, under
--strict, any FAIL at all, and 2 on usage or guard errors.  All output is
deterministic; the only timestamp lives in the JSON report metadata and is
suppressed by --no-meta.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .claims import (
    DEFAULT_MAX_N,
    FAIL,
    claim_ids,
    get_claim,
    render_report,
    verify_all,
)
from .exact import factorial, format_exact, parse_rational
from .permutations import ENUMERATION_GUARD, GuardError, excedance_distribution
from .sequences import SEQUENCE_NAMES, eulerian_numbers, sequence_table
from .series import (
    Series,
    bernoulli_series,
    egf_coeff,
    genocchi_series,
    phi_series,
    render_series,
    tanh_series,
)

DIST_GUARD_DEFAULT = 8
SERIES_ORDER_MAX = 64
SERIES_NAMES = ("tanh", "phi", "genocchi", "bernoulli")


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def cmd_seq(args: argparse.Namespace) -> int:
    name, count = args.name, args.count
    if name not in SEQUENCE_NAMES:
        return _fail_usage(f"unknown sequence {name!r}; expected one of {SEQUENCE_NAMES}")
    if count < 1:
        return _fail_usage(f"--count must be >= 1, got {count}")
    if name == "eulerian":
        rows = [eulerian_numbers(n) for n in range(1, count + 1)]
        if args.format == "json":
            doc = {
                "name": name,
                "count": count,
                "rows": [[str(v) for v in row] for row in rows],
            }
            print(json.dumps(doc, indent=2))
        else:
            for row in rows:
                print(" ".join(str(v) for v in row))
        return 0
    table = sequence_table(name, count)
    rendered = [format_exact(e.value) for e in table.entries]
    if args.format == "json":
        doc = {"name": name, "count": count, "values": rendered}
        print(json.dumps(doc, indent=2))
    else:
        print(", ".join(rendered))
    return 0


def cmd_dist(args: argparse.Namespace) -> int:
    n = args.n
    guard = ENUMERATION_GUARD if args.force else DIST_GUARD_DEFAULT
    if n < 1 or n > guard:
        hint = "" if args.force else f" (--force raises the cap to {ENUMERATION_GUARD})"
        return _fail_usage(f"n must be within 1..{guard}{hint}, got {n}")
    tally = excedance_distribution(n)
    total = sum(tally)
    n_factorial = factorial(n)
    if args.format == "json":
        doc = {
            "n": n,
            "rows": [{"k": k, "count": str(c)} for k, c in enumerate(tally)],
            "sum": str(total),
            "factorial": str(n_factorial),
        }
        print(json.dumps(doc, indent=2))
    else:
        k_width = max(len("k"), len(str(n - 1)))
        c_width = max(len("count"), *(len(str(c)) for c in tally))
        print(f"{'k'.ljust(k_width)}  {'count'.ljust(c_width)}".rstrip())
        for k, c in enumerate(tally):
            print(f"{str(k).ljust(k_width)}  {str(c).ljust(c_width)}".rstrip())
        if total == n_factorial:
            print(f"sum = {total} = {n}!")
        else:
            print(f"sum = {total} != {n}! = {n_factorial}")
    return 0


def _build_series(name: str, order: int, t: Fraction | None) -> Series:
    if name == "tanh":
        return tanh_series(order)
    if name == "genocchi":
        return genocchi_series(order)
    if name == "bernoulli":
        return bernoulli_series(order)
    assert name == "phi"
    assert t is not None
    return phi_series(t, order)


def cmd_series(args: argparse.Namespace) -> int:
    name, order = args.name, args.order
    if name not in SERIES_NAMES:
        return _fail_usage(f"unknown series {name!r}; expected one of {SERIES_NAMES}")
    if order < 0 or order > SERIES_ORDER_MAX:
        return _fail_usage(f"--order must be within 0..{SERIES_ORDER_MAX}, got {order}")
    t = args.t
    if name == "phi":
        if t is None:
            return _fail_usage("phi needs --t (any exact rational except 1)")
        if t == 1:
            return _fail_usage(
                "phi is undefined at t=1: the denominator t - e^(x(t-1)) "
                "has a vanishing constant term there"
            )
    elif t is not None:
        return _fail_usage(f"--t only applies to phi, not {name!r}")
    series = _build_series(name, order, t)
    ordinary = [format_exact(c) for c in series.coeffs]
    egf = [format_exact(egf_coeff(series, k)) for k in range(order + 1)]
    if name == "phi":
        label = f"phi(t={format_exact(t)}, order={order})"
    else:
        label = f"{name}(order={order})"
    if args.format == "json":
        doc: dict = {"name": name}
        if name == "phi":
            doc["t"] = format_exact(t)
        doc.update({"order": order, "coeffs": ordinary, "egf": egf})
        print(json.dumps(doc, indent=2))
    else:
        print(f"{label} = {render_series(series)}")
        n_width = max(len("n"), len(str(order)))
        o_width = max(len("[x^n]"), *(len(v) for v in ordinary))
        e_width = max(len("n!*[x^n]"), *(len(v) for v in egf))
        print(f"{'n'.ljust(n_width)}  {'[x^n]'.ljust(o_width)}  {'n!*[x^n]'.ljust(e_width)}".rstrip())
        for k in range(order + 1):
            print(f"{str(k).ljust(n_width)}  {ordinary[k].ljust(o_width)}  {egf[k].ljust(e_width)}".rstrip())
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.claims.strip() == "all":
        ids = None
    else:
        ids = tuple(part.strip() for part in args.claims.split(",") if part.strip())
        if not ids:
            return _fail_usage("--claims needs 'all' or a comma-separated id list")
        for claim_id in ids:
            try:
                get_claim(claim_id)
            except KeyError:
                return _fail_usage(
                    f"unknown claim {claim_id!r}; registered: {', '.join(claim_ids())}"
                )
    try:
        report = verify_all(args.max_n, ids, force=args.force)
    except (GuardError, ValueError) as exc:
        return _fail_usage(str(exc))
    print(render_report(report, args.format, include_meta=not args.no_meta))
    any_fail = any(r.verdict == FAIL for r in report.results)
    unexpected = [
        r.claim_id
        for r in report.results
        if r.verdict != get_claim(r.claim_id).expected_verdict(args.max_n)
    ]
    if args.strict and any_fail:
        return 1
    if unexpected:
        print(
            f"unexpected verdicts for: {', '.join(unexpected)}",
            file=sys.stderr,
        )
        return 1
    return 0


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text",
        help="output format (default: text)",
    )
    common.add_argument(
        "--no-meta", action="store_true",
        help="omit timestamp/version metadata from JSON output",
    )
    common.add_argument(
        "--force", action="store_true",
        help="raise desk-scale guards (enumeration up to length 12, verification past max-n 8)",
    )

    parser = argparse.ArgumentParser(
        prog="excedance",
        description="Exact permutation statistics, classical sequences, and identity verification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_seq = sub.add_parser("seq", parents=[common], help="print the first values of a sequence")
    p_seq.add_argument("name", help=f"one of {', '.join(SEQUENCE_NAMES)}")
    p_seq.add_argument("--count", type=int, required=True, help="how many values (>= 1)")
    p_seq.set_defaults(func=cmd_seq)

    p_dist = sub.add_parser("dist", parents=[common], help="excedance distribution table")
    p_dist.add_argument("n", type=int, help="permutation length (1..8, 12 with --force)")
    p_dist.set_defaults(func=cmd_dist)

    p_series = sub.add_parser("series", parents=[common], help="print a truncated series")
    p_series.add_argument("name", help=f"one of {', '.join(SERIES_NAMES)}")
    p_series.add_argument("--order", type=int, required=True,
                          help=f"truncation order (0..{SERIES_ORDER_MAX})")
    p_series.add_argument("--t", type=_rational_arg, default=None,
                          help="evaluation point for phi (exact rational, not 1)")
    p_series.set_defaults(func=cmd_series)

    p_verify = sub.add_parser("verify", parents=[common], help="verify registered claims")
    p_verify.add_argument("--claims", default="all",
                          help="'all' or comma-separated claim ids (default: all)")
    p_verify.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, dest="max_n",
                          help=f"index bound (default {DEFAULT_MAX_N}; higher needs --force)")
    p_verify.add_argument("--strict", action="store_true",
                          help="exit 1 if any claim FAILs, even expected ones")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
