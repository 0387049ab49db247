"""Command-line entry point for the verification suites."""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .verifier import SUITES, RunConfig, exit_code, render_json, render_text, run_suite


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="morava2-verify",
        description="Verify ring presentations against finite-group oracles and report per-claim outcomes.",
    )
    parser.add_argument(
        "--suite",
        action="append",
        choices=SUITES + ("all",),
        help="suite to run (repeatable); default: all",
    )
    parser.add_argument("--s-max", type=int, default=2, help="height ceiling (default 2)")
    parser.add_argument("--m-max", type=int, default=3, help="quaternion parameter ceiling (default 3)")
    parser.add_argument("--k-max", type=int, default=3, help="cyclic parameter ceiling (default 3)")
    parser.add_argument("--degree-bound", type=int, default=40, help="weighted-degree bound for truncated runs (default 40)")
    parser.add_argument("--format", choices=("text", "json"), default="text", help="report format")
    parser.add_argument("--out", type=str, default=None, help="write the report to this path instead of stdout")
    parser.add_argument(
        "--allow-discrepancies",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="with --no-allow-discrepancies, RECORDED claims carrying a mismatch witness fail the run",
    )
    parser.add_argument(
        "--timings",
        action="store_true",
        help="include measured elapsedMs values (makes reports non-reproducible)",
    )
    return parser


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.s_max < 1:
        parser.error("--s-max must be >= 1")
    if args.m_max < 2:
        parser.error("--m-max must be >= 2")
    if args.k_max < 1:
        parser.error("--k-max must be >= 1")
    if args.degree_bound < 4:
        parser.error("--degree-bound must be >= 4")
    suites = tuple(SUITES) if not args.suite or "all" in args.suite else tuple(dict.fromkeys(args.suite))
    config = RunConfig(
        s_max=args.s_max,
        m_max=args.m_max,
        k_max=args.k_max,
        degree_bound=args.degree_bound,
        suites=suites,
        output_format=args.format,
        allow_discrepancies=args.allow_discrepancies,
        timings=args.timings,
    )
    reports = run_suite(config)
    rendered = render_json(reports, args.timings) if args.format == "json" else render_text(reports, args.timings)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)
    return exit_code(reports, args.allow_discrepancies)


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
