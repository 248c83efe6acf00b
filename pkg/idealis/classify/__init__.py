from .model import (
    IMPLICATIONS,
    PREDICATE_ALIASES,
    ORACLE,
    PREDICATES,
    TRANSFER_ORACLE,
    Classification,
    ShapeSummary,
    alias_of,
    implication_violations,
)
from .structural import (
    DEFAULT_RULES,
    MUTATED_RULES,
    StructuralRules,
    classify,
    classify_finite_pir,
    classify_principal_pid,
    classify_product,
    shape_of,
)
from .engine import ENGINES, classify_with_engine

__all__ = [
    "IMPLICATIONS",
    "PREDICATE_ALIASES",
    "ORACLE",
    "PREDICATES",
    "TRANSFER_ORACLE",
    "Classification",
    "ShapeSummary",
    "alias_of",
    "implication_violations",
    "DEFAULT_RULES",
    "MUTATED_RULES",
    "StructuralRules",
    "classify",
    "classify_finite_pir",
    "classify_principal_pid",
    "classify_product",
    "shape_of",
    "ENGINES",
    "classify_with_engine",
]
