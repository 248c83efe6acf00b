"""Element-level validation of the representative reduction.

On small rings the element-quantified predicates are re-run over every
element instead of one generator per principal ideal. Both runs must agree.
"""

import logging

from ..core import Ideal, RingSpec, contains, element_mul, elements, format_ring, ideal_radical, principal, ring_size
from ..errors import ResourceCapError
from .brute import TRIPLE_ELEMENTS, TRIPLE_IDEALS, TRIPLE_PRIMARY, PAIR_ELEMENTS, PAIR_PRIMARY, prepare_table
from .search import search_tuples
from .witness import PredicateResult, Witness

logger = logging.getLogger(__name__)

VALIDATION_MAX_ELEMENTS = 64

ELEMENT_PREDICATES = (
    "prime",
    "primary",
    "singly_strongly_two_irreducible",
    "two_absorbing",
    "two_absorbing_primary",
    "triple_cover",
)


class _ElementTables:
    def __init__(self, ring: RingSpec, i: Ideal, max_ideals: int | None, limit: int):
        self.table, _ = prepare_table(ring, i, max_ideals)
        self.elems = list(elements(ring, limit))
        n = len(self.elems)
        rad = ideal_radical(i)
        self.inside = [contains(i, e) for e in self.elems]
        self.in_rad = [contains(rad, e) for e in self.elems]
        pos = {e: k for k, e in enumerate(self.elems)}
        self.mul = [[pos[element_mul(ring, a, b)] for b in self.elems] for a in self.elems]
        self.principal = [self.table.index(principal(ring, e)) for e in self.elems]
        logger.debug(f"Element tables for {format_ring(ring)}: {n} elements")

    def result(self, found, cases, kind, disjuncts) -> PredicateResult:
        if found is None:
            return PredicateResult(True, None, cases)
        return PredicateResult(False, Witness(kind, tuple(self.elems[x] for x in found), disjuncts), cases)


def element_level_results(
    ring: RingSpec,
    i: Ideal,
    threads: int | None = None,
    max_ideals: int | None = None,
    limit: int = VALIDATION_MAX_ELEMENTS,
) -> dict[str, PredicateResult]:
    size = ring_size(ring)
    if size > limit:
        raise ResourceCapError(f"{format_ring(ring)} has {size} elements; validation mode allows {limit}")
    e = _ElementTables(ring, i, max_ideals, limit)
    t, k = e.table, e.table.index(i)
    below = [t.leq[a][k] for a in range(t.size)]
    dom = range(len(e.elems))
    m = e.mul

    def prime(tp):
        a, b = tp
        return e.inside[m[a][b]] and not e.inside[a] and not e.inside[b]

    def primary(tp):
        a, b = tp
        return e.inside[m[a][b]] and not e.inside[a] and not e.in_rad[b]

    def absorbing(side):
        def bad(tp):
            a, b, c = tp
            return (
                e.inside[m[m[a][b]][c]]
                and not e.inside[m[a][b]]
                and not side[m[a][c]]
                and not side[m[b][c]]
            )

        return bad

    def singly(tp):
        x, y, z = (e.principal[v] for v in tp)
        return (
            below[t.meet3(x, y, z)]
            and not below[t.meet[x][y]]
            and not below[t.meet[x][z]]
            and not below[t.meet[y][z]]
        )

    def cover(tp):
        x, y, z = (e.principal[v] for v in tp)
        a, b, c = t.join[x][y], t.join[x][z], t.join[y][z]
        return (
            below[t.meet3(a, b, c)]
            and not below[t.meet[a][b]]
            and not below[t.meet[a][c]]
            and not below[t.meet[b][c]]
        )

    return {
        "prime": e.result(*search_tuples(dom, 2, prime, threads), "element-pair", PAIR_ELEMENTS),
        "primary": e.result(*search_tuples(dom, 2, primary, threads), "element-pair", PAIR_PRIMARY),
        "singly_strongly_two_irreducible": e.result(
            *search_tuples(dom, 3, singly, threads), "element-triple", TRIPLE_IDEALS
        ),
        "two_absorbing": e.result(
            *search_tuples(dom, 3, absorbing(e.inside), threads), "element-triple", TRIPLE_ELEMENTS
        ),
        "two_absorbing_primary": e.result(
            *search_tuples(dom, 3, absorbing(e.in_rad), threads), "element-triple", TRIPLE_PRIMARY
        ),
        "triple_cover": e.result(*search_tuples(dom, 3, cover, threads), "element-triple", TRIPLE_IDEALS),
    }
