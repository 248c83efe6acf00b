#!/usr/bin/env python3
"""Print the first counterexample to a predicate, or report that it holds."""

import argparse
import logging
import sys

from dotenv import load_dotenv

from ..classify import PREDICATE_ALIASES
from ..core import format_ideal, format_ring, parse_ideal, parse_ring, require_proper
from ..errors import WitnessError
from ..oracle import EXTRA_CHECKS, PREDICATE_CHECKS, transfer_target, verify_witness
from .common import add_global_arguments, execute
from .output import OutputDocument, emit_json, print_witness, witness_payload

load_dotenv()

logger = logging.getLogger(__name__)

WITNESS_PREDICATES = {alias: PREDICATE_CHECKS[name] for alias, name in PREDICATE_ALIASES.items()}
WITNESS_PREDICATES["triple-cover"] = EXTRA_CHECKS["triple_cover"]


def _field_name(alias: str) -> str:
    return "triple_cover" if alias == "triple-cover" else PREDICATE_ALIASES[alias]


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--ring", required=True)
    parser.add_argument("--ideal", required=True)
    parser.add_argument(
        "--predicate",
        required=True,
        choices=list(WITNESS_PREDICATES),
        help="Predicate to search a counterexample for",
    )
    parser.add_argument("--format", choices=("json", "table"), default="table")


def handle(args: argparse.Namespace) -> int:
    ring = parse_ring(args.ring)
    ideal = parse_ideal(ring, args.ideal)
    require_proper(ideal)
    searched, target = transfer_target(ring, ideal)
    if searched != ring:
        logger.info(f"Searching {format_ideal(ideal)} of {format_ring(ring)} in {format_ring(searched)}")

    result = WITNESS_PREDICATES[args.predicate](searched, target)
    if not result.holds and not verify_witness(searched, target, _field_name(args.predicate), result.witness):
        raise WitnessError(f"{args.predicate} witness failed re-verification")

    payload = witness_payload(ring, ideal, args.predicate, searched, result)
    if args.format == "json":
        emit_json(OutputDocument(command="witness", payload=payload))
    else:
        print_witness(payload)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description="Find the first counterexample to a predicate")
    add_arguments(parser)
    add_global_arguments(parser)
    return execute(parser.parse_args(argv), handle)


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
