"""Brute-force definitional checkers over finite rings.

Element quantifiers run over one generator per principal ideal: whether
abc lies in I only depends on (a), (b), (c), because (abc) = (a)(b)(c).
All rings handled here are principal ideal rings, so the representatives
are exactly the generators of the lattice table's ideals.
"""

import logging
from collections.abc import Callable
from itertools import combinations, combinations_with_replacement, product

from ..classify.model import ORACLE, PREDICATES, TRANSFER_ORACLE, Classification
from ..config import get_settings
from ..core import (
    Ideal,
    Integers,
    PolyRing,
    RingSpec,
    contains,
    element_mul,
    format_ideal,
    format_ring,
    idempotents,
    is_finite,
    is_zero_ideal,
    quotient_map,
    require_proper,
    zero_ideal,
)
from ..errors import InfiniteRingError, RingMismatchError
from .lattice import LatticeTable, lattice_for
from .search import search_tuples
from .witness import PredicateResult, Witness

logger = logging.getLogger(__name__)

PAIR_ELEMENTS = ("a in I", "b in I")
PAIR_PRIMARY = ("a in I", "b in rad(I)")
TRIPLE_ELEMENTS = ("ab in I", "ac in I", "bc in I")
TRIPLE_PRIMARY = ("ab in I", "ac in rad(I)", "bc in rad(I)")
TRIPLE_IDEALS = ("J∩K ⊆ I", "J∩L ⊆ I", "K∩L ⊆ I")
TRIPLE_EQUAL = ("I = J∩K", "I = J∩L", "I = K∩L")


def _table(ring: RingSpec, max_ideals: int | None) -> LatticeTable:
    if not is_finite(ring):
        raise InfiniteRingError(f"brute force needs a finite ring, got {format_ring(ring)}")
    cap = get_settings().max_ideals if max_ideals is None else max_ideals
    return lattice_for(ring, cap)


def prepare_table(ring: RingSpec, i: Ideal, max_ideals: int | None) -> tuple[LatticeTable, int]:
    if i.ring != ring:
        raise RingMismatchError(f"{format_ideal(i)} is not an ideal of {format_ring(ring)}")
    t = _table(ring, max_ideals)
    require_proper(i)
    return t, t.index(i)


def _result(t: LatticeTable, found, cases, kind, disjuncts, as_ideals=False) -> PredicateResult:
    if found is None:
        return PredicateResult(True, None, cases)
    pool = t.ideals if as_ideals else t.reps
    return PredicateResult(False, Witness(kind, tuple(pool[x] for x in found), disjuncts), cases)


def _search(t: LatticeTable, arity: int, bad: Callable[[tuple], bool], threads: int | None):
    return search_tuples(range(t.size), arity, bad, threads)


# -- element-quantified predicates ------------------------------------------


def is_prime_bf(ring, i, threads=None, max_ideals=None) -> PredicateResult:
    t, k = prepare_table(ring, i, max_ideals)
    inside = [t.leq[a][k] for a in range(t.size)]

    def bad(tp):
        a, b = tp
        return inside[t.mul[a][b]] and not inside[a] and not inside[b]

    return _result(t, *_search(t, 2, bad, threads), "element-pair", PAIR_ELEMENTS)


def is_primary_bf(ring, i, threads=None, max_ideals=None) -> PredicateResult:
    t, k = prepare_table(ring, i, max_ideals)
    r = t.radical[k]
    inside = [t.leq[a][k] for a in range(t.size)]
    in_rad = [t.leq[a][r] for a in range(t.size)]

    def bad(tp):
        a, b = tp
        return inside[t.mul[a][b]] and not inside[a] and not in_rad[b]

    return _result(t, *_search(t, 2, bad, threads), "element-pair", PAIR_PRIMARY)


def is_radical_bf(ring, i, threads=None, max_ideals=None) -> PredicateResult:
    t, k = prepare_table(ring, i, max_ideals)
    r = t.radical[k]
    cases = 0
    for a in range(t.size):
        cases += 1
        if t.leq[a][r] and not t.leq[a][k]:
            power, exponent = a, 1
            while not t.leq[power][k]:
                power, exponent = t.mul[power][a], exponent + 1
            witness = Witness("element-power", (t.reps[a],), ("x in I",), exponent)
            return PredicateResult(False, witness, cases)
    return PredicateResult(True, None, cases)


def _two_absorbing_like(ring, i, threads, max_ideals, primary: bool) -> PredicateResult:
    t, k = prepare_table(ring, i, max_ideals)
    inside = [t.leq[a][k] for a in range(t.size)]
    side = [t.leq[a][t.radical[k]] for a in range(t.size)] if primary else inside

    def bad(tp):
        a, b, c = tp
        return (
            inside[t.mul3(a, b, c)]
            and not inside[t.mul[a][b]]
            and not side[t.mul[a][c]]
            and not side[t.mul[b][c]]
        )

    disjuncts = TRIPLE_PRIMARY if primary else TRIPLE_ELEMENTS
    return _result(t, *_search(t, 3, bad, threads), "element-triple", disjuncts)


def is_2_absorbing_bf(ring, i, threads=None, max_ideals=None) -> PredicateResult:
    return _two_absorbing_like(ring, i, threads, max_ideals, primary=False)


def is_2_absorbing_primary_bf(ring, i, threads=None, max_ideals=None) -> PredicateResult:
    return _two_absorbing_like(ring, i, threads, max_ideals, primary=True)


def is_singly_strongly_2_irreducible_bf(ring, i, threads=None, max_ideals=None) -> PredicateResult:
    # every ideal of a supported ring is principal, so Rx runs over the whole table
    t, k = prepare_table(ring, i, max_ideals)
    below = [t.leq[a][k] for a in range(t.size)]

    def bad(tp):
        x, y, z = tp
        return (
            below[t.meet3(x, y, z)]
            and not below[t.meet[x][y]]
            and not below[t.meet[x][z]]
            and not below[t.meet[y][z]]
        )

    return _result(t, *_search(t, 3, bad, threads), "element-triple", TRIPLE_IDEALS)


def triple_cover_condition_bf(ring, i, threads=None, max_ideals=None) -> PredicateResult:
    """(Rx+Ry)∩(Rx+Rz)∩(Ry+Rz) ⊆ I forces one of the pairwise intersections into I."""
    t, k = prepare_table(ring, i, max_ideals)
    below = [t.leq[a][k] for a in range(t.size)]

    def bad(tp):
        x, y, z = tp
        a, b, c = t.join[x][y], t.join[x][z], t.join[y][z]
        return (
            below[t.meet3(a, b, c)]
            and not below[t.meet[a][b]]
            and not below[t.meet[a][c]]
            and not below[t.meet[b][c]]
        )

    disjuncts = ("(x,y)∩(x,z) ⊆ I", "(x,y)∩(y,z) ⊆ I", "(x,z)∩(y,z) ⊆ I")
    return _result(t, *_search(t, 3, bad, threads), "element-triple", disjuncts)


# -- ideal-quantified predicates --------------------------------------------


def is_irreducible_bf(ring, i, threads=None, max_ideals=None) -> PredicateResult:
    t, k = prepare_table(ring, i, max_ideals)

    def bad(tp):
        j, l = tp
        return t.meet[j][l] == k and j != k and l != k

    return _result(t, *_search(t, 2, bad, threads), "ideal-pair", ("J = I", "K = I"), True)


def is_strongly_irreducible_bf(ring, i, threads=None, max_ideals=None) -> PredicateResult:
    t, k = prepare_table(ring, i, max_ideals)
    below = [t.leq[a][k] for a in range(t.size)]

    def bad(tp):
        j, l = tp
        return below[t.meet[j][l]] and not below[j] and not below[l]

    return _result(t, *_search(t, 2, bad, threads), "ideal-pair", ("J ⊆ I", "K ⊆ I"), True)


def is_2_irreducible_bf(ring, i, threads=None, max_ideals=None) -> PredicateResult:
    t, k = prepare_table(ring, i, max_ideals)

    def bad(tp):
        j, l, m = tp
        return (
            t.meet3(j, l, m) == k
            and t.meet[j][l] != k
            and t.meet[j][m] != k
            and t.meet[l][m] != k
        )

    return _result(t, *_search(t, 3, bad, threads), "ideal-triple", TRIPLE_EQUAL, True)


def is_strongly_2_irreducible_bf(ring, i, threads=None, max_ideals=None) -> PredicateResult:
    t, k = prepare_table(ring, i, max_ideals)
    below = [t.leq[a][k] for a in range(t.size)]

    def bad(tp):
        j, l, m = tp
        return (
            below[t.meet3(j, l, m)]
            and not below[t.meet[j][l]]
            and not below[t.meet[j][m]]
            and not below[t.meet[l][m]]
        )

    return _result(t, *_search(t, 3, bad, threads), "ideal-triple", TRIPLE_IDEALS, True)


# -- ring-level predicates --------------------------------------------------


def is_arithmetical_bf(ring, threads=None, max_ideals=None) -> PredicateResult:
    t = _table(ring, max_ideals)

    def bad(tp):
        a, b, c = tp
        return t.meet[t.join[a][b]][c] != t.join[t.meet[a][c]][t.meet[b][c]]

    return _result(t, *_search(t, 3, bad, threads), "ideal-triple", ("(I+J)∩K = (I∩K)+(J∩K)",), True)


def is_von_neumann_regular_bf(ring, threads=None, max_ideals=None) -> PredicateResult:
    t = _table(ring, max_ideals)

    def bad(tp):
        a, b = tp
        return t.mul[a][b] != t.meet[a][b]

    return _result(t, *_search(t, 2, bad, threads), "ideal-pair", ("IJ = I∩J",), True)


def prime_ideals_bf(ring, max_ideals=None) -> list[Ideal]:
    t = _table(ring, max_ideals)
    return [t.ideals[k] for k in t.proper() if is_prime_bf(ring, t.ideals[k], 1, max_ideals).holds]


def primary_ideals_bf(ring, max_ideals=None) -> list[Ideal]:
    t = _table(ring, max_ideals)
    return [t.ideals[k] for k in t.proper() if is_primary_bf(ring, t.ideals[k], 1, max_ideals).holds]


def irreducible_ideals_bf(ring, max_ideals=None) -> list[Ideal]:
    t = _table(ring, max_ideals)
    return [t.ideals[k] for k in t.proper() if is_irreducible_bf(ring, t.ideals[k], 1, max_ideals).holds]


# -- decompositions ---------------------------------------------------------


def is_n_primary_bf(ring, i, n: int, max_ideals=None) -> PredicateResult:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    t, k = prepare_table(ring, i, max_ideals)
    primaries = [t.index(q) for q in primary_ideals_bf(ring, max_ideals)]
    cases = 0
    for combo in combinations_with_replacement(primaries, n):
        cases += 1
        meet = combo[0]
        for q in combo[1:]:
            meet = t.meet[meet][q]
        if meet == k:
            return PredicateResult(True, None, cases, tuple(t.ideals[q] for q in combo))
    witness = Witness("exhaustion", (), (f"I is an intersection of {n} primary ideals",), n)
    return PredicateResult(False, witness, max(cases, 1))


def find_irreducible_decomposition(ring, i, max_parts: int, max_ideals=None) -> list[Ideal] | None:
    if max_parts not in (1, 2):
        raise ValueError(f"max_parts must be 1 or 2, got {max_parts}")
    t, k = prepare_table(ring, i, max_ideals)
    irreducible = [t.index(q) for q in irreducible_ideals_bf(ring, max_ideals)]
    if k in irreducible:
        return [i]
    if max_parts == 2:
        for a, b in combinations(irreducible, 2):
            if t.meet[a][b] == k:
                return [t.ideals[a], t.ideals[b]]
    return None


def idempotent_triple_condition_bf(ring, i, max_ideals=None, max_elements=None) -> PredicateResult:
    """e1e2e3 in I forces a pairwise product into I, over idempotents e1, e2, e3."""
    prepare_table(ring, i, max_ideals)
    cap = get_settings().max_elements if max_elements is None else max_elements
    es = idempotents(ring, cap)
    cases = 0
    for triple in product(es, repeat=3):
        cases += 1
        a, b, c = triple
        ab = element_mul(ring, a, b)
        if contains(i, element_mul(ring, ab, c)) and not (
            contains(i, ab) or contains(i, element_mul(ring, a, c)) or contains(i, element_mul(ring, b, c))
        ):
            return PredicateResult(False, Witness("element-triple", triple, TRIPLE_ELEMENTS), cases)
    return PredicateResult(True, None, cases)


# -- whole classifications --------------------------------------------------

PREDICATE_CHECKS: dict[str, Callable[..., PredicateResult]] = {
    "prime": is_prime_bf,
    "primary": is_primary_bf,
    "radical": is_radical_bf,
    "irreducible": is_irreducible_bf,
    "strongly_irreducible": is_strongly_irreducible_bf,
    "two_irreducible": is_2_irreducible_bf,
    "strongly_two_irreducible": is_strongly_2_irreducible_bf,
    "singly_strongly_two_irreducible": is_singly_strongly_2_irreducible_bf,
    "two_absorbing": is_2_absorbing_bf,
    "two_absorbing_primary": is_2_absorbing_primary_bf,
}

# Predicates with a witness search but no Classification field.
EXTRA_CHECKS: dict[str, Callable[..., PredicateResult]] = {
    "triple_cover": triple_cover_condition_bf,
}


def oracle_results(ring, i, threads=None, max_ideals=None) -> dict[str, PredicateResult]:
    return {name: check(ring, i, threads, max_ideals) for name, check in PREDICATE_CHECKS.items()}


def transfer_target(ring: RingSpec, i: Ideal) -> tuple[RingSpec, Ideal]:
    """Finite ring and ideal whose oracle verdicts equal those of i.

    A nonzero ideal (a) of Z or GF(p)[x] corresponds to the zero ideal of
    the quotient by (a). Elementwise conditions and radicals pass through
    the surjection because its kernel lies in I; the ideal-lattice
    conditions pass through because both rings are arithmetical.
    """
    if i.ring != ring:
        raise RingMismatchError(f"{format_ideal(i)} is not an ideal of {format_ring(ring)}")
    if is_finite(ring):
        return ring, i
    if isinstance(ring, (Integers, PolyRing)):
        require_proper(i)
        if is_zero_ideal(i):
            raise InfiniteRingError(
                f"the zero ideal of {format_ring(ring)} has no finite quotient to search"
            )
        qmap = quotient_map(ring, i)
        return qmap.codomain, zero_ideal(qmap.codomain)
    raise InfiniteRingError(f"the oracle engine does not support {format_ring(ring)}")


def classify_by_oracle(ring, i, threads=None, max_ideals=None) -> Classification:
    target_ring, target = transfer_target(ring, i)
    source = ORACLE if target_ring == ring else TRANSFER_ORACLE
    logger.debug(f"Oracle classification of {format_ideal(i)} in {format_ring(target_ring)}")
    results = oracle_results(target_ring, target, threads, max_ideals)
    return Classification.from_verdicts(
        {p: results[p].holds for p in PREDICATES}, {p: source for p in PREDICATES}
    )
