#!/usr/bin/env python3
"""idealis command line: classify, survey, verify, witness, schema."""

import argparse
import sys

from dotenv import load_dotenv

from ..classify import PREDICATE_ALIASES
from . import classify, survey, verify, witness
from .common import add_global_arguments, execute
from .output import emit_schema

load_dotenv()

COMMANDS = {
    "classify": (classify, "Classify one ideal against the ten predicates"),
    "survey": (survey, "Classify every proper ideal of a ring"),
    "verify": (verify, "Replay the theorem checks over ring families"),
    "witness": (witness, "Find the first counterexample to a predicate"),
}

EPILOG = (
    "predicate names: "
    + ", ".join(f"{alias} ({field})" for alias, field in PREDICATE_ALIASES.items())
    + ", triple-cover (witness only)\n"
    "exit codes: 0 ok, 1 check failure, 2 usage or parse error, 3 ideal not proper, "
    "4 resource cap, 5 engines disagree"
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idealis",
        description="Classify ideals of concrete commutative rings and replay theorems about them",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (module, help_text) in COMMANDS.items():
        command = sub.add_parser(name, help=help_text, description=help_text)
        module.add_arguments(command)
        add_global_arguments(command)
        command.set_defaults(handler=module.handle)
    schema = sub.add_parser("schema", help="Print the JSON schema of the output document")
    add_global_arguments(schema)
    schema.set_defaults(handler=_print_schema)
    return parser


def _print_schema(args: argparse.Namespace) -> int:
    emit_schema()
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return execute(args, args.handler)


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
