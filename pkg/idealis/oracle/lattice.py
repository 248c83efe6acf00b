"""Index tables over the ideal lattice of a finite ring.

Ideals are numbered in ``enumerate_ideals`` order. Every table entry is an
index, so the brute-force predicates run on integer lookups only.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

from ..core import (
    Ideal,
    RingElement,
    RingSpec,
    enumerate_ideals,
    format_ring,
    generator_element,
    ideal_intersect,
    ideal_leq,
    ideal_mul,
    ideal_radical,
    ideal_sum,
    whole_ideal,
    zero_ideal,
)
from ..errors import RingMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LatticeTable:
    ring: RingSpec
    ideals: tuple[Ideal, ...]
    reps: tuple[RingElement, ...]
    meet: tuple[tuple[int, ...], ...]
    join: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    leq: tuple[tuple[bool, ...], ...]
    radical: tuple[int, ...]
    whole: int
    zero: int

    @property
    def size(self) -> int:
        return len(self.ideals)

    def index(self, i: Ideal) -> int:
        if i.ring != self.ring:
            raise RingMismatchError(f"{i} is not an ideal of {format_ring(self.ring)}")
        return self.ideals.index(i)

    def proper(self) -> list[int]:
        return [k for k in range(self.size) if k != self.whole]

    def meet3(self, a: int, b: int, c: int) -> int:
        return self.meet[self.meet[a][b]][c]

    def mul3(self, a: int, b: int, c: int) -> int:
        return self.mul[self.mul[a][b]][c]


def build_lattice(ring: RingSpec, max_ideals: int | None = None) -> LatticeTable:
    ideals = tuple(enumerate_ideals(ring, max_ideals))
    pos = {i: k for k, i in enumerate(ideals)}
    n = len(ideals)
    logger.debug(f"Building lattice tables for {format_ring(ring)} ({n} ideals)")

    def table(op):
        return tuple(tuple(pos[op(a, b)] for b in ideals) for a in ideals)

    return LatticeTable(
        ring=ring,
        ideals=ideals,
        reps=tuple(generator_element(i) for i in ideals),
        meet=table(ideal_intersect),
        join=table(ideal_sum),
        mul=table(ideal_mul),
        leq=tuple(tuple(ideal_leq(a, b) for b in ideals) for a in ideals),
        radical=tuple(pos[ideal_radical(i)] for i in ideals),
        whole=pos[whole_ideal(ring)],
        zero=pos[zero_ideal(ring)],
    )


@lru_cache(maxsize=128)
def lattice_for(ring: RingSpec, max_ideals: int | None = None) -> LatticeTable:
    """Shared, cached tables; rings and caps are hashable values."""
    return build_lattice(ring, max_ideals)
