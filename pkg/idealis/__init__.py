from .classify import (
    PREDICATES,
    Classification,
    classify,
    classify_with_engine,
    implication_violations,
)
from .config import Settings, get_settings, set_settings
from .core import (
    Ideal,
    Integers,
    IntegersMod,
    PolyQuotient,
    PolyRing,
    Product,
    enumerate_ideals,
    format_ideal,
    format_ring,
    parse_ideal,
    parse_ring,
)
from .errors import IdealisError
from .oracle import classify_by_oracle, oracle_results, verify_witness
from .theorems import SuiteConfig, get_registry, run_check, run_suite, shutdown_registry

__all__ = [
    "PREDICATES",
    "Classification",
    "classify",
    "classify_with_engine",
    "implication_violations",
    "Settings",
    "get_settings",
    "set_settings",
    "Ideal",
    "Integers",
    "IntegersMod",
    "PolyQuotient",
    "PolyRing",
    "Product",
    "enumerate_ideals",
    "format_ideal",
    "format_ring",
    "parse_ideal",
    "parse_ring",
    "IdealisError",
    "classify_by_oracle",
    "oracle_results",
    "verify_witness",
    "SuiteConfig",
    "get_registry",
    "run_check",
    "run_suite",
    "shutdown_registry",
]
