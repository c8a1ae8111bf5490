"""Command-line front end: ``check <suite>`` sweeps and ``eval`` one-off values.

Exit codes: 0 when every instance passes, 1 on any failure, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .arith import rational_to_str
from .finite import is_prime, primes_between, zeta_A_t
from .indices import InvalidIndex, dual, hoffman_dual, is_admissible, make_index
from .interp import G_poly, IndexSum, g_poly, h_poly, interpolate
from .numeric import DEFAULT_TOL, DEFAULT_TRUNC, eval_indexsum_numeric, mzv_numeric
from .suites import (
    SUITES,
    SuiteError,
    SuiteParams,
    format_report,
    parse_prime_range,
    parse_t_values,
    run_suite,
    CSV_FIELDS,
)

EVAL_TARGETS = ("g", "h", "G", "It", "dual", "hoffman-dual", "zeta", "zetaA")


def _parse_index(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return make_index(int(x) for x in text.split(","))
    except ValueError as exc:
        raise SuiteError(f"bad index {text!r}: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="interp-mzv",
        description="Verify interpolated multiple zeta value identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run a verification sweep")
    check.add_argument("suite", choices=SUITES)
    check.add_argument("--max-weight", type=int)
    check.add_argument("--max-m", type=int)
    check.add_argument("--k-max", type=int)
    check.add_argument("--primes", help="inclusive prime range a..b")
    check.add_argument("--trunc", type=int, default=DEFAULT_TRUNC)
    check.add_argument("--tol", type=float, default=DEFAULT_TOL)
    check.add_argument("--t", default="0,1/2,1", help="comma-separated rational t values")
    check.add_argument("--format", choices=("json", "csv"), default="json")
    check.add_argument("--stable", action="store_true", help="omit timing fields")
    check.add_argument("--jobs", type=int, default=1)
    check.add_argument("-o", "--output", help="write the report here instead of stdout")

    ev = sub.add_parser("eval", help="print one computed object")
    ev.add_argument("what", choices=EVAL_TARGETS)
    ev.add_argument("--index", required=True, help='comma-separated entries, e.g. "2,1,3"')
    ev.add_argument("--m", type=int, default=0)
    ev.add_argument("--p", type=int, help="prime for zetaA")
    ev.add_argument("--primes", help="prime range a..b for zetaA")
    ev.add_argument("--t", help="rational t for zeta (evaluates the interpolated value)")
    ev.add_argument("--trunc", type=int, default=DEFAULT_TRUNC)
    return parser


def _emit_indexsum(s: IndexSum, out: TextIO) -> None:
    for term in s.to_json():
        out.write(json.dumps(term, separators=(",", ":")) + "\n")


def _run_eval(args, out: TextIO) -> int:
    k = _parse_index(args.index)
    if args.m < 0:
        raise SuiteError("--m must be non-negative")
    what = args.what
    if what in ("g", "h", "G"):
        if not k:
            raise SuiteError(f"{what} needs a non-empty index")
        fn = {"g": g_poly, "h": h_poly, "G": G_poly}[what]
        _emit_indexsum(fn(args.m, k), out)
    elif what == "It":
        _emit_indexsum(interpolate(k), out)
    elif what in ("dual", "hoffman-dual"):
        img = dual(k) if what == "dual" else hoffman_dual(k)
        out.write(json.dumps({"index": list(img)}, separators=(",", ":")) + "\n")
    elif what == "zeta":
        if not is_admissible(k):
            raise SuiteError(f"zeta needs an admissible index, got {list(k)}")
        if args.trunc < 10:
            raise SuiteError("--trunc must be >= 10")
        if args.t is None:
            val = mzv_numeric(k, args.trunc)
            rec = {"index": list(k), "value": val.value, "err_bound": val.err_bound}
        else:
            (t,) = parse_t_values(args.t)
            val = eval_indexsum_numeric(interpolate(k), t, args.trunc)
            rec = {"index": list(k), "t": rational_to_str(t), "value": val.value, "err_bound": val.err_bound}
        out.write(json.dumps(rec, separators=(",", ":")) + "\n")
    else:
        if args.p is not None:
            if not is_prime(args.p) or args.p < 3:
                raise SuiteError(f"--p must be an odd prime, got {args.p}")
            primes = [args.p]
        elif args.primes:
            primes = [p for p in primes_between(*parse_prime_range(args.primes)) if p >= 3]
        else:
            raise SuiteError("zetaA needs --p or --primes")
        for p in primes:
            rec = {"index": list(k), **zeta_A_t(k, p).to_json()}
            out.write(json.dumps(rec, separators=(",", ":")) + "\n")
    return 0


def _run_check(args, out: TextIO) -> int:
    if args.jobs < 1:
        raise SuiteError("--jobs must be >= 1")
    params = SuiteParams(
        max_weight=args.max_weight,
        max_m=args.max_m,
        k_max=args.k_max,
        primes=parse_prime_range(args.primes) if args.primes else None,
        trunc=args.trunc,
        tol=args.tol,
        t_values=parse_t_values(args.t),
    )
    if args.format == "csv":
        out.write(",".join(CSV_FIELDS) + "\n")
    failed = total = 0
    for report in run_suite(args.suite, params, args.jobs):
        total += 1
        failed += not report.passed
        out.write(format_report(report, args.format, args.stable) + "\n")
    print(f"{args.suite}: {total - failed}/{total} passed", file=sys.stderr)
    return 1 if failed else 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handle = None
    try:
        if args.command == "check" and args.output:
            handle = open(args.output, "w", encoding="utf-8", newline="")
        out = handle or sys.stdout
        if args.command == "check":
            return _run_check(args, out)
        return _run_eval(args, out)
    except (SuiteError, InvalidIndex) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        if handle is not None:
            handle.close()


if __name__ == "__main__":
    sys.exit(main())
