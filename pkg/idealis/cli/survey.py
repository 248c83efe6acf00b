#!/usr/bin/env python3
"""Classify every proper ideal of a ring."""

import argparse
import logging
import sys

from dotenv import load_dotenv

from ..arith import monic_polys
from ..classify import ENGINES, classify_with_engine
from ..config import get_settings
from ..core import (
    Ideal,
    Integers,
    PolyRing,
    RingSpec,
    enumerate_ideals,
    format_ideal,
    format_ring,
    is_finite,
    parse_ring,
    principal,
    whole_ideal,
    zero_ideal,
)
from ..errors import InfiniteRingError
from .common import add_global_arguments, execute, positive_int
from .output import (
    ClassificationModel,
    OutputDocument,
    SurveyPayload,
    SurveyRow,
    emit_json,
    print_survey,
    write_survey_csv,
)

load_dotenv()

logger = logging.getLogger(__name__)


def survey_ideals(ring: RingSpec, max_generator: int | None = None, max_degree: int | None = None) -> list[Ideal]:
    """Proper ideals in enumeration order; Z and GF(p)[x] need an explicit bound."""
    match ring:
        case Integers():
            if max_generator is None:
                raise InfiniteRingError("surveying Z needs --max-generator")
            return [zero_ideal(ring)] + [principal(ring, g) for g in range(2, max_generator + 1)]
        case PolyRing(p=p):
            if max_degree is None:
                raise InfiniteRingError(f"surveying {format_ring(ring)} needs --max-degree")
            gens = [f for d in range(1, max_degree + 1) for f in monic_polys(p, d)]
            return [zero_ideal(ring)] + [principal(ring, f) for f in gens]
    if not is_finite(ring):
        raise InfiniteRingError(f"cannot survey {format_ring(ring)}: a product with an infinite component")
    whole = whole_ideal(ring)
    return [i for i in enumerate_ideals(ring, get_settings().max_ideals) if i != whole]


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--ring", required=True, help='Ring, e.g. "Z/12" or "Z/4 x Z/9"')
    parser.add_argument("--format", choices=("json", "csv", "table"), default="table")
    parser.add_argument("--engine", choices=ENGINES, default="structural")
    parser.add_argument(
        "--max-generator",
        type=positive_int,
        default=None,
        help="For Z: survey (0) and (2)..(N)",
    )
    parser.add_argument(
        "--max-degree",
        type=positive_int,
        default=None,
        help="For GF(p)[x]: survey (0) and every monic generator of degree 1..D",
    )


def handle(args: argparse.Namespace) -> int:
    ring = parse_ring(args.ring)
    ideals = survey_ideals(ring, args.max_generator, args.max_degree)
    logger.info(f"Surveying {len(ideals)} proper ideals of {format_ring(ring)}")

    rows = [
        SurveyRow(ideal=format_ideal(i), classification=ClassificationModel.of(classify_with_engine(ring, i, args.engine)))
        for i in ideals
    ]
    payload = SurveyPayload(ring=format_ring(ring), engine=args.engine, rows=rows)
    if args.format == "json":
        emit_json(OutputDocument(command="survey", payload=payload))
    elif args.format == "csv":
        write_survey_csv(payload)
    else:
        print_survey(payload)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description="Classify every proper ideal of a ring")
    add_arguments(parser)
    add_global_arguments(parser)
    return execute(parser.parse_args(argv), handle)


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
