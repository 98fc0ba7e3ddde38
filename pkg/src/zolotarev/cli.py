"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import bench, verifier
from .deals import Deal, DealKind, GridSpec, deal_permutation, make_deal
from .errors import PreconditionError
from .perms import count_inversions_fast, cycle_decomposition, sign_via_cycles
from .symbols import (
    jacobi_factored,
    jacobi_reciprocity,
    legendre_bruteforce,
    legendre_euler,
    zolotarev_symbol,
)

KINDS = [k.value for k in DealKind]


class UsageError(Exception):
    pass


def render_ascii(deal: Deal) -> str:
    width = max(len(str(v)) for row in deal.cells for v in row)
    return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in deal.cells) + "\n"


def parse_ascii(text: str) -> Deal:
    rows = [tuple(int(tok) for tok in line.split()) for line in text.splitlines() if line.strip()]
    if not rows:
        raise ValueError("empty grid")
    base = min(min(r) for r in rows)
    return Deal(GridSpec(len(rows), len(rows[0])), tuple(rows), label_base=base)


def deal_to_dict(deal: Deal, kind: str) -> dict:
    return {
        "kind": kind,
        "m": deal.spec.m,
        "n": deal.spec.n,
        "label_base": deal.label_base,
        "cells": deal.as_lists(),
    }


def _deal_from_args(kind: str, args) -> Deal:
    if kind in ("zigzag", "modzigzag") and args.modulus is None:
        raise UsageError(f"--kind {kind} requires --modulus")
    if args.modulus is None and (args.rows is None or args.cols is None):
        raise UsageError(f"--kind {kind} requires -m and -n (or --modulus for a 2-row supplement deal)")
    if args.modulus is not None and kind == "diag":
        raise UsageError("the diagonal deal takes -m and -n, not --modulus")
    return make_deal(kind, args.rows, args.cols, args.modulus)


def cmd_deal(args) -> int:
    deal = _deal_from_args(args.kind, args)
    if args.format == "json":
        sys.stdout.write(json.dumps(deal_to_dict(deal, args.kind)) + "\n")
    else:
        sys.stdout.write(render_ascii(deal))
    return 0


def _format_sign(s: int) -> str:
    return "+1" if s > 0 else "-1"


def cmd_perm(args) -> int:
    src = _deal_from_args(args.src, args)
    dst = _deal_from_args(args.dst, args)
    p = deal_permutation(src, dst)
    base = src.label_base
    queries = [q for q in ("image", "cycles", "inversions", "sign") if getattr(args, q)]
    if not queries:
        queries = ["image", "cycles", "inversions", "sign"]
    values = {}
    for q in queries:
        if q == "image":
            values[q] = " ".join(f"{x + base}->{y + base}" for x, y in enumerate(p.image))
        elif q == "cycles":
            values[q] = "".join(
                "(" + " ".join(str(x + base) for x in c) + ")" for c in cycle_decomposition(p)
            )
        elif q == "inversions":
            values[q] = str(count_inversions_fast(p))
        else:
            values[q] = _format_sign(sign_via_cycles(p))
    if len(queries) == 1:
        print(values[queries[0]])
    else:
        for q in queries:
            print(f"{q}: {values[q]}")
    return 0


_SYMBOLS = {
    ("legendre", "euler"): legendre_euler,
    ("legendre", "brute"): legendre_bruteforce,
    ("jacobi", "reciprocity"): jacobi_reciprocity,
    ("jacobi", "factored"): jacobi_factored,
    ("zolotarev", "cycles"): zolotarev_symbol,
}
_DEFAULT_METHOD = {"legendre": "euler", "jacobi": "reciprocity", "zolotarev": "cycles"}


def cmd_symbol(args) -> int:
    method = args.method or _DEFAULT_METHOD[args.kind]
    fn = _SYMBOLS.get((args.kind, method))
    if fn is None:
        raise UsageError(f"method {method!r} is not available for the {args.kind} symbol")
    print(fn(args.a, args.n))
    return 0


def _parse_fault(text: str) -> verifier.Fault:
    suite, _, params = text.partition(":")
    try:
        values = tuple(int(v) for v in params.split(",") if v)
    except ValueError as exc:
        raise UsageError(f"bad fault spec {text!r}") from exc
    return verifier.Fault(verifier.canonical_suite(suite), values)


def cmd_verify(args) -> int:
    max_m = args.max_m if args.max_m is not None else args.max
    max_n = args.max_n if args.max_n is not None else args.max
    for name, value in (("max", max_m), ("max", max_n), ("primes", args.primes), ("jobs", args.jobs)):
        if value < 1:
            raise UsageError(f"--{name} must be >= 1, got {value}")
    if args.oracle_max is not None and args.oracle_max < 0:
        raise UsageError("--oracle-max must be >= 0")
    config = verifier.SweepConfig(
        suite=args.suite,
        max_m=max_m,
        max_n=max_n,
        max_p=args.primes,
        parallelism=args.jobs,
        seed=args.seed,
        oracle_max=args.oracle_max,
    )
    fault = _parse_fault(args.inject_fault) if args.inject_fault else None
    report = verifier.run_suite(config, fault=fault)
    for sub in report.suites or [report]:
        print(sub.summary())
        for f in sub.failures:
            print(f"  FAIL {f['check']} at {f['parameters']}: expected {f['expected']}, got {f['actual']}")
    if report.suites:
        print(report.summary())
    if args.report:
        report.write(args.report)
        print(f"report written to {args.report}")
    return 0 if report.passed else 1


def _parse_sizes(text: str) -> list[int]:
    try:
        sizes = [int(s) for s in text.split(",") if s.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --sizes {text!r}") from exc
    if not sizes or min(sizes) < 1:
        raise UsageError("--sizes needs positive integers")
    return sizes


def cmd_bench(args) -> int:
    if args.repetitions < 1:
        raise UsageError("--repetitions must be >= 1")
    start = time.perf_counter()
    if args.suite == "signs":
        sizes = _parse_sizes(args.sizes)
        results = bench.bench_signs(sizes, seed=args.seed, repetitions=args.repetitions, generator=args.generator)
        ranges = {"sizes": sizes, "generator": args.generator}
    else:
        if args.max < 3:
            raise UsageError("--max must be >= 3 for the jacobi benchmark")
        results = bench.bench_jacobi(args.max, args.samples, seed=args.seed, repetitions=args.repetitions)
        ranges = {"max_n": args.max, "samples": args.samples}
    sys.stdout.write(bench.render_table(results))
    report = bench.to_report(args.suite, ranges, results, time.perf_counter() - start)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    for f in report["failures"]:
        print(f"checksum mismatch: {f['parameters']} {f['actual']}", file=sys.stderr)
    return 1 if report["failures"] else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zolotarev", description="Card deals, permutation signs and reciprocity.")
    sub = parser.add_subparsers(dest="command", required=True)

    def dims(p):
        p.add_argument("-m", "--rows", type=int, help="number of rows")
        p.add_argument("-n", "--cols", type=int, help="number of columns")
        p.add_argument("--modulus", type=int, help="odd n >= 3 for the 2 x (n-1)/2 supplement deals")

    p = sub.add_parser("deal", help="print a deal as a grid")
    dims(p)
    p.add_argument("--kind", choices=KINDS, default="row")
    p.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p.set_defaults(func=cmd_deal)

    p = sub.add_parser("perm", help="the permutation taking one deal to another")
    dims(p)
    p.add_argument("--from", dest="src", choices=KINDS, required=True)
    p.add_argument("--to", dest="dst", choices=KINDS, required=True)
    p.add_argument("--image", action="store_true", help="print label -> label pairs")
    p.add_argument("--cycles", action="store_true", help="print the cycle decomposition")
    p.add_argument("--inversions", action="store_true", help="print the inversion count")
    p.add_argument("--sign", action="store_true", help="print the sign")
    p.set_defaults(func=cmd_perm)

    p = sub.add_parser("symbol", help="evaluate a Legendre, Jacobi or Zolotarev symbol")
    kind = p.add_mutually_exclusive_group(required=True)
    for k in ("legendre", "jacobi", "zolotarev"):
        kind.add_argument(f"--{k}", dest="kind", action="store_const", const=k)
    p.add_argument("--method", help="legendre: euler|brute; jacobi: reciprocity|factored")
    p.add_argument("a", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_symbol)

    suites = list(verifier.SUITES) + list(verifier.ALIASES) + ["all"]
    p = sub.add_parser("verify", help="run verification sweeps")
    p.add_argument("--suite", choices=suites, default="all")
    p.add_argument("--max", type=int, default=31, help="bound for m and n")
    p.add_argument("--max-m", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--primes", type=int, default=199, help="bound for primes")
    p.add_argument("--oracle-max", type=int, help="a-range for the Jacobi oracle comparison (default: --max)")
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("-j", "--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject-fault", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="benchmark the competing algorithms")
    p.add_argument("--suite", choices=("signs", "jacobi"), required=True)
    p.add_argument("--sizes", default="1000,100000")
    p.add_argument("--generator", choices=("random", "reversal"), default="random")
    p.add_argument("--max", type=int, default=10_000)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--repetitions", type=int, default=bench.MIN_REPETITIONS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", help="write the JSON report here")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, PreconditionError, ValueError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
