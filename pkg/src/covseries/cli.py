"""Command-line entry point: ``covseries series|dim|table|verify|batch``.

Exit codes: 0 success, 1 verification mismatch (or batch failure),
2 invalid arguments, 3 a cache file failed re-verification and was replaced.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cache import batch
from .dims import dim_cov, dim_table
from .poly import render
from .springer import poincare_series, verify_dimensions


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covseries",
        description="Bivariate Poincaré series of covariants of binary forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", help="print P_d(z,t) as a reduced rational function")
    p.add_argument("d", type=_positive)
    p.add_argument("--format", choices=["text", "latex", "json"], default="text")
    p.add_argument("--out", type=Path, help="write to FILE instead of stdout")

    p = sub.add_parser("dim", help="dimension of covariants of degree i and order j")
    p.add_argument("d", type=_positive)
    p.add_argument("i", type=_nonneg)
    p.add_argument("j", type=_nonneg)

    p = sub.add_parser("table", help="dimension grid for i <= I, j <= J")
    p.add_argument("d", type=_positive)
    p.add_argument("--imax", type=_nonneg, required=True)
    p.add_argument("--jmax", type=_nonneg, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")

    p = sub.add_parser("verify", help="check the series against the dimension oracle")
    p.add_argument("d", type=_positive)
    p.add_argument("--imax", type=_nonneg, default=10)
    p.add_argument("--jmax", type=_nonneg, default=None, help="default: d * imax")

    p = sub.add_parser("batch", help="compute and cache P_1 .. P_D")
    p.add_argument("--dmax", type=_positive, required=True)
    p.add_argument("--cache", type=Path, required=True)
    p.add_argument("--workers", type=_positive, default=None)
    return parser


def run(args: argparse.Namespace, out=None) -> int:
    out = out or sys.stdout
    if args.command == "series":
        text = render(poincare_series(args.d), args.format)
        if args.out is not None:
            args.out.write_text(text + "\n", encoding="utf-8")
        else:
            print(text, file=out)
        return 0
    if args.command == "dim":
        print(dim_cov(args.d, args.i, args.j), file=out)
        return 0
    if args.command == "table":
        table = dim_table(args.d, args.imax, args.jmax)
        if args.format == "csv":
            out.write(table.to_csv())
        else:
            print(json.dumps(table.to_dict()), file=out)
        return 0
    if args.command == "verify":
        jmax = args.d * args.imax if args.jmax is None else args.jmax
        report = verify_dimensions(args.d, args.imax, jmax)
        for line in report.lines():
            print(line, file=out)
        if report.passed:
            print(f"d={args.d}: ok up to (i,j)=({args.imax},{jmax})", file=out)
            return 0
        return 1
    if args.command == "batch":
        status = 0
        for entry in batch(args.dmax, args.cache, args.workers):
            print(f"d={entry.d} {entry.status} {entry.seconds:.3f}s", file=out, flush=True)
            if entry.detail:
                print(f"  {entry.detail}", file=out)
            if entry.status == "failed":
                status = 1
            elif entry.status == "recomputed" and status == 0:
                status = 3
        return status
    raise AssertionError(args.command)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
