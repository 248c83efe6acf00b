from .base import CaseTally, CheckContext, CheckExecutor, CheckReport, Counterexample, TheoremCheck
from .checks import DEFAULT_CHECKS
from .families import (
    DEFAULT_PRODUCTS,
    SuiteConfig,
    explicit_family,
    integers_mod_family,
    matrix_rings,
    poly_quotient_family,
    require_nonempty,
)
from .registry import CheckRegistry, get_registry, shutdown_registry
from .suite import CSV_COLUMNS, run_check, run_suite, suite_status, write_csv_summary

__all__ = [
    "CaseTally",
    "CheckContext",
    "CheckExecutor",
    "CheckReport",
    "Counterexample",
    "TheoremCheck",
    "DEFAULT_CHECKS",
    "DEFAULT_PRODUCTS",
    "SuiteConfig",
    "explicit_family",
    "integers_mod_family",
    "matrix_rings",
    "poly_quotient_family",
    "require_nonempty",
    "CheckRegistry",
    "get_registry",
    "shutdown_registry",
    "CSV_COLUMNS",
    "run_check",
    "run_suite",
    "suite_status",
    "write_csv_summary",
]
