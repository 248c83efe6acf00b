"""Theorem-driven classifiers: verdicts from factorization shape and product structure.

Rule ids recorded in provenance:

    pid.zero-prime          zero ideal of Z or GF(p)[x] is prime
    pid.prime-power         (a) irreducible / strongly irreducible / primary iff a is a prime power
    pid.prime               (a) prime iff a is prime
    pid.two-prime-powers    the 2-irreducible family iff a has at most two prime factors
    squarefree              radical iff the generator is squarefree
    radical.two-primes      a radical ideal is 2-absorbing iff it meets at most two primes
    pir.one-component       one proper chain component
    pir.prime               one proper component, exponent 1
    pir.two-components      at most two proper chain components
    product                 one proper component with the property, or two with the stronger one
"""

import logging
from dataclasses import dataclass

from ..arith import factor_int, factor_poly
from ..core import (
    Ideal,
    Integers,
    IntegersMod,
    PolyQuotient,
    PolyRing,
    Product,
    RingSpec,
    format_ideal,
    format_ring,
    is_proper,
    is_zero_ideal,
    require_proper,
)
from ..errors import RingMismatchError, UnsupportedRingError
from ..oracle import brute
from .model import ORACLE, PREDICATES, TRANSFER_ORACLE, Classification, ShapeSummary, structural

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StructuralRules:
    two_component_bound: int = 2


DEFAULT_RULES = StructuralRules()
MUTATED_RULES = StructuralRules(two_component_bound=3)

TWO_IRREDUCIBLE_FAMILY = (
    "two_irreducible",
    "strongly_two_irreducible",
    "singly_strongly_two_irreducible",
    "two_absorbing_primary",
)


def shape_of(i: Ideal) -> ShapeSummary:
    """Prime-support shape of the canonical generator of a nonzero PID or finite-PIR ideal."""
    match i.ring:
        case Integers():
            if i.rep == 0:
                raise ValueError("the zero ideal of Z has no factorization shape")
            return ShapeSummary.from_exponents(factor_int(i.rep).exponents)
        case IntegersMod():
            return ShapeSummary.from_exponents(factor_int(i.rep).exponents)
        case PolyRing() | PolyQuotient():
            if i.rep.is_zero():
                raise ValueError(f"the zero ideal of {format_ring(i.ring)} has no factorization shape")
            if i.rep.degree == 0:
                return ShapeSummary.from_exponents(())
            return ShapeSummary.from_exponents(factor_poly(i.rep).exponents)
    raise UnsupportedRingError(f"no factorization shape for ideals of {format_ring(i.ring)}")


def _shape_verdicts(shape: ShapeSummary, bound: int, family: str) -> tuple[dict, dict]:
    k = shape.distinct_prime_count
    one_rule = "pid.prime-power" if family == "pid" else "pir.one-component"
    two_rule = "pid.two-prime-powers" if family == "pid" else "pir.two-components"
    prime_rule = "pid.prime" if family == "pid" else "pir.prime"
    verdicts, provenance = {}, {}
    for p in ("irreducible", "strongly_irreducible", "primary"):
        verdicts[p], provenance[p] = k == 1, structural(one_rule)
    for p in TWO_IRREDUCIBLE_FAMILY:
        verdicts[p], provenance[p] = k <= bound, structural(two_rule)
    verdicts["prime"], provenance["prime"] = k == 1 and shape.exponents[0] == 1, structural(prime_rule)
    verdicts["radical"], provenance["radical"] = shape.squarefree, structural("squarefree")
    if shape.squarefree:
        verdicts["two_absorbing"] = k <= bound
        provenance["two_absorbing"] = structural("radical.two-primes")
    return verdicts, provenance


def classify_principal_pid(ring: RingSpec, i: Ideal, rules: StructuralRules = DEFAULT_RULES, threads=None, max_ideals=None) -> Classification:
    if not isinstance(ring, (Integers, PolyRing)):
        raise UnsupportedRingError(f"{format_ring(ring)} is not Z or GF(p)[x]")
    require_proper(i)
    if is_zero_ideal(i):
        return Classification.uniform(True, structural("pid.zero-prime"))
    verdicts, provenance = _shape_verdicts(shape_of(i), rules.two_component_bound, "pid")
    if "two_absorbing" not in verdicts:
        target_ring, target = brute.transfer_target(ring, i)
        verdicts["two_absorbing"] = brute.is_2_absorbing_bf(target_ring, target, threads, max_ideals).holds
        provenance["two_absorbing"] = TRANSFER_ORACLE
    return Classification.from_verdicts(verdicts, provenance)


def classify_finite_pir(ring: RingSpec, i: Ideal, rules: StructuralRules = DEFAULT_RULES, threads=None, max_ideals=None) -> Classification:
    if not isinstance(ring, (IntegersMod, PolyQuotient)):
        raise UnsupportedRingError(f"{format_ring(ring)} is not Z/n or GF(p)[x]/(f)")
    require_proper(i)
    # the proper CRT components of I are those whose prime divides the generator
    verdicts, provenance = _shape_verdicts(shape_of(i), rules.two_component_bound, "pir")
    if "two_absorbing" not in verdicts:
        verdicts["two_absorbing"] = brute.is_2_absorbing_bf(ring, i, threads, max_ideals).holds
        provenance["two_absorbing"] = ORACLE
    return Classification.from_verdicts(verdicts, provenance)


_SINGLE_ONLY = ("prime", "primary", "irreducible", "strongly_irreducible")
_PAIR_RULES = {
    "two_irreducible": "irreducible",
    "strongly_two_irreducible": "strongly_irreducible",
    "singly_strongly_two_irreducible": "strongly_irreducible",
    "two_absorbing": "prime",
    "two_absorbing_primary": "primary",
}


def _source(parts: list[Classification], fields: tuple[str, ...]) -> str:
    for c in parts:
        for f in fields:
            if not c.provenance[f].startswith("structural"):
                return c.provenance[f]
    return structural("product")


def classify_product(ring: RingSpec, i: Ideal, rules: StructuralRules = DEFAULT_RULES, threads=None, max_ideals=None) -> Classification:
    if not isinstance(ring, Product):
        raise UnsupportedRingError(f"{format_ring(ring)} is not a product ring")
    require_proper(i)
    parts = [
        classify(c, comp, rules, threads, max_ideals)
        for c, comp in zip(ring.components, i.rep)
        if is_proper(comp)
    ]
    one, two = len(parts) == 1, len(parts) == 2
    verdicts, provenance = {}, {}
    for p in _SINGLE_ONLY:
        verdicts[p] = one and getattr(parts[0], p)
        provenance[p] = _source(parts, (p,)) if one else structural("product")
    for p, pair_field in _PAIR_RULES.items():
        if one:
            verdicts[p], provenance[p] = getattr(parts[0], p), _source(parts, (p,))
        elif two:
            verdicts[p] = all(getattr(c, pair_field) for c in parts)
            provenance[p] = _source(parts, (pair_field,))
        else:
            verdicts[p], provenance[p] = False, structural("product")
    verdicts["radical"] = all(c.radical for c in parts)
    provenance["radical"] = _source(parts, ("radical",))
    return Classification.from_verdicts(verdicts, provenance)


def classify(ring: RingSpec, i: Ideal, rules: StructuralRules = DEFAULT_RULES, threads=None, max_ideals=None) -> Classification:
    if i.ring != ring:
        raise RingMismatchError(f"{format_ideal(i)} is not an ideal of {format_ring(ring)}")
    match ring:
        case Integers() | PolyRing():
            result = classify_principal_pid(ring, i, rules, threads, max_ideals)
        case IntegersMod() | PolyQuotient():
            result = classify_finite_pir(ring, i, rules, threads, max_ideals)
        case Product():
            result = classify_product(ring, i, rules, threads, max_ideals)
        case _:
            raise UnsupportedRingError(f"unsupported ring {ring!r}")
    missing = [p for p in PREDICATES if p not in result.provenance]
    if missing:
        raise RuntimeError(f"classification of {format_ideal(i)} lacks provenance for {missing}")
    return result
