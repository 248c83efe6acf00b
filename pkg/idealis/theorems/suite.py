"""Suite runner: executes selected checks and summarizes their reports."""

import csv
import logging
from pathlib import Path
from typing import TextIO

from .base import CheckContext, CheckExecutor, CheckReport
from .families import SuiteConfig, matrix_rings
from .registry import get_registry

logger = logging.getLogger(__name__)

CSV_COLUMNS = ("theorem_id", "cases", "status")


def run_suite(config: SuiteConfig | None = None, selected: list[str] | None = None) -> list[CheckReport]:
    """Run the selected checks (all when None) in registration order.

    Raises EmptyFamilyError before any check runs when the configured matrix
    is empty and UnknownCheckError for an unregistered id.
    """
    config = config or SuiteConfig()
    checks = get_registry().select(selected)
    matrix = matrix_rings(config)
    logger.info(f"Running {len(checks)} checks over {len(matrix)} matrix rings")

    executor = CheckExecutor(CheckContext(config))
    reports = [executor.execute(check) for check in checks]

    for check_id, seconds in executor.timings.items():
        logger.debug(f"[{check_id}] {seconds:.2f}s")
    logger.info(f"Suite finished: {suite_status(reports)}")
    return reports


def run_check(check_id: str, config: SuiteConfig | None = None) -> CheckReport:
    return run_suite(config, [check_id])[0]


def suite_status(reports: list[CheckReport]) -> str:
    """'pass' only when every report passed; otherwise 'fail' if any failed, else 'error'."""
    if all(r.status == "pass" for r in reports):
        return "pass"
    return "fail" if any(r.status == "fail" for r in reports) else "error"


def write_csv_summary(reports: list[CheckReport], out: TextIO | Path) -> None:
    if isinstance(out, Path):
        with out.open("w", newline="", encoding="utf-8") as f:
            write_csv_summary(reports, f)
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        writer.writerow((r.theorem_id, r.cases, r.status))
