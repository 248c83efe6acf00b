#!/usr/bin/env python3
"""Classify one ideal against the ten predicates."""

import argparse
import logging
import sys

from dotenv import load_dotenv

from ..classify import ENGINES, classify_with_engine
from ..core import format_ideal, format_ring, parse_ideal, parse_ring, require_proper
from .common import add_global_arguments, execute
from .output import OutputDocument, classification_payload, emit_json, print_classification

load_dotenv()

logger = logging.getLogger(__name__)


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--ring", required=True, help='Ring, e.g. "Z", "Z/12", "GF(2)[x]/(x^3)", "Z/4 x Z/9"')
    parser.add_argument("--ideal", required=True, help='Ideal generators, e.g. "(6)" or "([2],[3])" in a product')
    parser.add_argument("--format", choices=("json", "table"), default="json")
    parser.add_argument(
        "--engine",
        choices=ENGINES,
        default="structural",
        help="structural rules, brute-force oracle, or both (exit 5 when they disagree)",
    )


def handle(args: argparse.Namespace) -> int:
    ring = parse_ring(args.ring)
    ideal = parse_ideal(ring, args.ideal)
    require_proper(ideal)
    logger.info(f"Classifying {format_ideal(ideal)} in {format_ring(ring)} with engine {args.engine}")

    c = classify_with_engine(ring, ideal, args.engine)
    payload = classification_payload(ring, ideal, args.engine, c)
    if args.format == "table":
        print_classification(payload)
    else:
        emit_json(OutputDocument(command="classify", payload=payload))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description="Classify an ideal of a concrete commutative ring")
    add_arguments(parser)
    add_global_arguments(parser)
    return execute(parser.parse_args(argv), handle)


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
