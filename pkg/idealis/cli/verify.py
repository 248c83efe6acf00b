#!/usr/bin/env python3
"""Run the theorem verification suite."""

import argparse
import logging
import sys
from dataclasses import replace
from pathlib import Path

from dotenv import load_dotenv

from ..theorems import SuiteConfig, get_registry, run_suite, suite_status, write_csv_summary
from .common import add_global_arguments, execute, positive_int
from .output import OutputDocument, ReportModel, VerifyPayload, emit_json, print_reports, reports_json

load_dotenv()

logger = logging.getLogger(__name__)


def parse_suite(text: str) -> list[str] | None:
    """'all' selects every check; otherwise a comma-separated list of check ids."""
    if text.strip() == "all":
        return None
    return [part.strip() for part in text.split(",") if part.strip()]


def suite_config(args: argparse.Namespace) -> SuiteConfig:
    config = SuiteConfig(threads=args.threads, max_ideals=args.max_ideals, mutate=args.mutate)
    if args.max_n is not None:
        # an explicit bound replaces the default extras as well
        config = replace(
            config,
            max_n=args.max_n,
            extra_n=(),
            triple_cover_max_n=min(config.triple_cover_max_n, args.max_n),
        )
    if args.max_deg is not None:
        config = replace(config, gf2_max_deg=args.max_deg)
    if args.max_deg_gf3 is not None:
        config = replace(config, gf3_max_deg=args.max_deg_gf3)
    if args.ring:
        config = replace(config, rings=tuple(args.ring))
    return config


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--suite",
        default="all",
        help="'all' or a comma-separated list of check ids (see --list)",
    )
    parser.add_argument("--list", action="store_true", help="List the available checks and exit")
    parser.add_argument("--max-n", type=positive_int, default=None, help="Largest n for the Z/n family (default 120 plus 210, 360)")
    parser.add_argument("--max-deg", type=positive_int, default=None, help="Largest modulus degree for GF(2)[x]/(f) (default 5)")
    parser.add_argument("--max-deg-gf3", type=positive_int, default=None, help="Largest modulus degree for GF(3)[x]/(f) (default 3)")
    parser.add_argument(
        "--ring",
        action="append",
        default=[],
        help="Explicit ring to check; repeatable; replaces every generated family",
    )
    parser.add_argument("--report", type=Path, default=None, help="Write the JSON array of check reports here")
    parser.add_argument("--csv", type=Path, default=None, help="Write a CSV summary (theorem_id, cases, status) here")
    parser.add_argument("--mutate", action="store_true", help="Flip the two-component rule to three; some check must fail")
    parser.add_argument("--format", choices=("json", "table"), default="json")


def handle(args: argparse.Namespace) -> int:
    if args.list:
        print(get_registry().get_checks_summary())
        return 0

    reports = run_suite(suite_config(args), parse_suite(args.suite))
    status = suite_status(reports)
    payload = VerifyPayload(status=status, mutate=args.mutate, reports=[ReportModel.of(r) for r in reports])

    if args.report is not None:
        args.report.write_bytes(reports_json(reports) + b"\n")
        logger.info(f"Report written to {args.report}")
    if args.csv is not None:
        write_csv_summary(reports, args.csv)
        logger.info(f"CSV summary written to {args.csv}")

    if args.format == "table":
        print_reports(payload)
    else:
        emit_json(OutputDocument(command="verify", payload=payload))
    return 0 if status == "pass" else 1


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description="Replay the theorem checks over ring families")
    add_arguments(parser)
    add_global_arguments(parser)
    return execute(parser.parse_args(argv), handle)


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
