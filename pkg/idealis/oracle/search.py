"""Deterministic first-violation search, optionally split across threads.

The search space is a sequence of tuples in lexicographic order. It is
partitioned on the first coordinate; each partition reports its own first
violation and the number of cases it examined. Partitions are reduced in
order, so the answer and the case count are the same for any thread count.
"""

from collections.abc import Callable, Iterable, Sequence
from itertools import product

from ..config import get_settings
from .pool import get_pool_manager

Scan = Callable[[int], tuple[tuple | None, int]]


def scan_partition(first: int, rest: Iterable[tuple], violates: Callable[[tuple], bool]):
    """First violating tuple starting with first, and the cases examined."""
    cases = 0
    for tail in rest:
        cases += 1
        t = (first, *tail)
        if violates(t):
            return t, cases
    return None, cases


def first_violation(
    heads: Sequence[int], scan: Scan, threads: int | None = None
) -> tuple[tuple | None, int]:
    threads = get_settings().threads if threads is None else threads
    total = 0
    if threads <= 1 or len(heads) <= 1:
        for h in heads:
            found, cases = scan(h)
            total += cases
            if found is not None:
                return found, total
        return None, total

    pool = get_pool_manager().get_pool(threads)
    for found, cases in pool.map(scan, heads):
        total += cases
        if found is not None:
            return found, total
    return None, total


def search_tuples(
    domain: Sequence[int],
    arity: int,
    violates: Callable[[tuple], bool],
    threads: int | None = None,
) -> tuple[tuple | None, int]:
    """Search domain**arity in lexicographic order for the first violating tuple."""

    def scan(h: int):
        return scan_partition(h, product(domain, repeat=arity - 1), violates)

    return first_violation(domain, scan, threads)
