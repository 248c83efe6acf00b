"""Counterexample carriers and the independent witness re-verifier.

The re-verifier never touches the precomputed lattice tables: it replays
each definition with the ideal operations of ``idealis.core`` and with real
element arithmetic, so a witness produced by the table-driven search is
checked by a second code path.
"""

import logging
from dataclasses import dataclass
from functools import reduce
from itertools import combinations_with_replacement
from typing import Literal

from ..core import (
    Ideal,
    RingSpec,
    contains,
    element_mul,
    enumerate_ideals,
    format_element,
    format_ideal,
    generator_element,
    ideal_intersect,
    ideal_leq,
    ideal_mul,
    ideal_radical,
    ideal_sum,
    principal,
    whole_ideal,
)
from ..errors import WitnessError

logger = logging.getLogger(__name__)

WitnessKind = Literal[
    "element-pair",
    "element-triple",
    "element-power",
    "ideal-pair",
    "ideal-triple",
    "exhaustion",
]

IDEAL_KINDS = ("ideal-pair", "ideal-triple")


@dataclass(frozen=True)
class Witness:
    kind: WitnessKind
    items: tuple
    failed_disjuncts: tuple[str, ...]
    # the power k for element-power witnesses, n for n-primary exhaustion
    parameter: int | None = None

    def describe(self, ring: RingSpec) -> list[str]:
        if self.kind in IDEAL_KINDS:
            return [format_ideal(i) for i in self.items]
        return [format_element(ring, x) for x in self.items]


@dataclass(frozen=True)
class PredicateResult:
    holds: bool
    witness: Witness | None
    cases_checked: int
    decomposition: tuple[Ideal, ...] | None = None

    def __post_init__(self):
        if self.holds == (self.witness is not None):
            raise ValueError("a witness must be present exactly when the predicate fails")


def _meet(*ideals: Ideal) -> Ideal:
    return reduce(ideal_intersect, ideals)


def _mul(ring: RingSpec, *xs):
    return reduce(lambda a, b: element_mul(ring, a, b), xs)


def _elementwise_triple(ring, i, items, use_radical) -> bool:
    x, y, z = items
    rad = ideal_radical(i)
    side = rad if use_radical else i
    return (
        contains(i, _mul(ring, x, y, z))
        and not contains(i, _mul(ring, x, y))
        and not contains(side, _mul(ring, x, z))
        and not contains(side, _mul(ring, y, z))
    )


def _cover_triple(ring, i, items) -> bool:
    x, y, z = (principal(ring, v) for v in items)
    a, b, c = ideal_sum(x, y), ideal_sum(x, z), ideal_sum(y, z)
    return ideal_leq(_meet(a, b, c), i) and not any(
        ideal_leq(_meet(u, v), i) for u, v in ((a, b), (a, c), (b, c))
    )


def _strong_triple(i, j, k, l) -> bool:
    return ideal_leq(_meet(j, k, l), i) and not any(
        ideal_leq(_meet(u, v), i) for u, v in ((j, k), (j, l), (k, l))
    )


def _is_primary(ring, q: Ideal) -> bool:
    rad = ideal_radical(q)
    reps = _reps(ring)
    return all(
        not contains(q, element_mul(ring, a, b)) or contains(q, a) or contains(rad, b)
        for a in reps
        for b in reps
    )


def _reps(ring):
    return [generator_element(i) for i in enumerate_ideals(ring)]


def _replay(ring: RingSpec, i: Ideal | None, predicate: str, w: Witness) -> bool:
    items = w.items
    match (predicate, w.kind):
        case ("prime", "element-pair"):
            a, b = items
            return contains(i, element_mul(ring, a, b)) and not contains(i, a) and not contains(i, b)
        case ("primary", "element-pair"):
            a, b = items
            return (
                contains(i, element_mul(ring, a, b))
                and not contains(i, a)
                and not contains(ideal_radical(i), b)
            )
        case ("radical", "element-power"):
            (x,) = items
            return not contains(i, x) and contains(i, _mul(ring, *([x] * w.parameter)))
        case ("irreducible", "ideal-pair"):
            j, k = items
            return _meet(j, k) == i and j != i and k != i
        case ("strongly_irreducible", "ideal-pair"):
            j, k = items
            return ideal_leq(_meet(j, k), i) and not ideal_leq(j, i) and not ideal_leq(k, i)
        case ("two_irreducible", "ideal-triple"):
            j, k, l = items
            return _meet(j, k, l) == i and i not in (_meet(j, k), _meet(j, l), _meet(k, l))
        case ("strongly_two_irreducible", "ideal-triple"):
            return _strong_triple(i, *items)
        case ("singly_strongly_two_irreducible", "element-triple"):
            return _strong_triple(i, *(principal(ring, v) for v in items))
        case ("two_absorbing", "element-triple"):
            return _elementwise_triple(ring, i, items, use_radical=False)
        case ("two_absorbing_primary", "element-triple"):
            return _elementwise_triple(ring, i, items, use_radical=True)
        case ("triple_cover", "element-triple"):
            return _cover_triple(ring, i, items)
        case ("idempotent_triple", "element-triple"):
            return all(element_mul(ring, e, e) == e for e in items) and _elementwise_triple(
                ring, i, items, use_radical=False
            )
        case ("arithmetical", "ideal-triple"):
            a, b, c = items
            return _meet(ideal_sum(a, b), c) != ideal_sum(_meet(a, c), _meet(b, c))
        case ("von_neumann_regular", "ideal-pair"):
            a, b = items
            return ideal_mul(a, b) != _meet(a, b)
        case ("n_primary", "exhaustion"):
            primaries = [q for q in enumerate_ideals(ring) if q != whole_ideal(ring) and _is_primary(ring, q)]
            return not any(
                _meet(*combo) == i for combo in combinations_with_replacement(primaries, w.parameter)
            )
    raise WitnessError(f"no replay rule for predicate {predicate!r} with a {w.kind} witness")


def verify_witness(ring: RingSpec, i: Ideal | None, predicate: str, witness: Witness) -> bool:
    """Replay the definition of predicate at the witness; True iff it is violated there."""
    ok = _replay(ring, i, predicate, witness)
    if not ok:
        logger.warning(f"Witness {witness.describe(ring)} does not refute {predicate} for {i}")
    return ok
