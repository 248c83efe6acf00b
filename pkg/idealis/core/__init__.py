from .ideals import (
    Ideal,
    crt_components,
    contains,
    enumerate_ideals,
    enumerate_principal_reps,
    format_ideal,
    generated_ideal,
    generator_element,
    ideal_count,
    ideal_intersect,
    ideal_leq,
    ideal_mul,
    ideal_radical,
    ideal_sum,
    idempotents,
    is_proper,
    is_zero_ideal,
    make_ideal,
    is_maximal,
    maximal_ideals,
    principal,
    require_proper,
    whole_ideal,
    zero_ideal,
)
from .parsing import parse_element, parse_ideal, parse_ring
from .quotient import QuotientMap, contract, extend, map_element, quotient_map
from .rings import (
    Integers,
    IntegersMod,
    PolyQuotient,
    PolyRing,
    Product,
    RingElement,
    RingSpec,
    components,
    element_add,
    element_is_zero,
    element_mul,
    element_neg,
    elements,
    format_element,
    format_ring,
    is_finite,
    is_finite_pir,
    is_pid,
    make_product,
    normalize_element,
    one_element,
    ring_size,
    zero_element,
)

__all__ = [
    "Ideal",
    "crt_components",
    "contains",
    "enumerate_ideals",
    "enumerate_principal_reps",
    "format_ideal",
    "generated_ideal",
    "generator_element",
    "ideal_count",
    "ideal_intersect",
    "ideal_leq",
    "ideal_mul",
    "ideal_radical",
    "ideal_sum",
    "idempotents",
    "is_proper",
    "is_zero_ideal",
    "make_ideal",
    "is_maximal",
    "maximal_ideals",
    "principal",
    "require_proper",
    "whole_ideal",
    "zero_ideal",
    "parse_element",
    "parse_ideal",
    "parse_ring",
    "QuotientMap",
    "contract",
    "extend",
    "map_element",
    "quotient_map",
    "Integers",
    "IntegersMod",
    "PolyQuotient",
    "PolyRing",
    "Product",
    "RingElement",
    "RingSpec",
    "components",
    "element_add",
    "element_is_zero",
    "element_mul",
    "element_neg",
    "elements",
    "format_element",
    "format_ring",
    "is_finite",
    "is_finite_pir",
    "is_pid",
    "make_product",
    "normalize_element",
    "one_element",
    "ring_size",
    "zero_element",
]
