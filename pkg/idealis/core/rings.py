"""Ring descriptors and element arithmetic for the supported ring families."""

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Union

from ..arith import PrimeFieldPoly, format_poly
from ..arith.integers import check_natural, checked_add, checked_mul
from ..arith.polynomials import check_characteristic
from ..errors import InfiniteRingError, RingMismatchError, ResourceCapError


@dataclass(frozen=True)
class Integers:
    pass


@dataclass(frozen=True)
class IntegersMod:
    n: int

    def __post_init__(self):
        check_natural(self.n, "modulus")
        if self.n < 2:
            raise ValueError(f"modulus must be >= 2, got {self.n}")


@dataclass(frozen=True)
class PolyRing:
    p: int

    def __post_init__(self):
        check_characteristic(self.p)


@dataclass(frozen=True)
class PolyQuotient:
    p: int
    f: PrimeFieldPoly

    def __post_init__(self):
        check_characteristic(self.p)
        if self.f.p != self.p:
            raise RingMismatchError(f"modulus {self.f} is not over GF({self.p})")
        if self.f.degree < 1 or not self.f.is_monic():
            raise ValueError(f"quotient modulus must be monic of degree >= 1, got {self.f}")


@dataclass(frozen=True)
class Product:
    components: tuple

    def __post_init__(self):
        if len(self.components) < 2:
            raise ValueError("a product needs at least two components")
        if any(isinstance(c, Product) for c in self.components):
            raise ValueError("products must be flattened; use make_product")


RingSpec = Union[Integers, IntegersMod, PolyRing, PolyQuotient, Product]
RingElement = Union[int, PrimeFieldPoly, tuple]


def make_product(*rings: RingSpec) -> Product:
    """Build a flattened product, preserving component order."""
    flat = []
    for r in rings:
        flat.extend(r.components if isinstance(r, Product) else (r,))
    return Product(tuple(flat))


def components(ring: RingSpec) -> tuple:
    return ring.components if isinstance(ring, Product) else (ring,)


def is_finite(ring: RingSpec) -> bool:
    return not any(isinstance(c, (Integers, PolyRing)) for c in components(ring))


def is_pid(ring: RingSpec) -> bool:
    return isinstance(ring, (Integers, PolyRing))


def is_finite_pir(ring: RingSpec) -> bool:
    return is_finite(ring)


def require_finite(ring: RingSpec) -> None:
    if not is_finite(ring):
        raise InfiniteRingError(f"{format_ring(ring)} is infinite")


def ring_size(ring: RingSpec) -> int:
    require_finite(ring)
    match ring:
        case IntegersMod(n=n):
            return n
        case PolyQuotient(p=p, f=f):
            return p**f.degree
        case Product(components=cs):
            return math.prod(ring_size(c) for c in cs)
    raise InfiniteRingError(f"{format_ring(ring)} is infinite")


def format_ring(ring: RingSpec) -> str:
    match ring:
        case Integers():
            return "Z"
        case IntegersMod(n=n):
            return f"Z/{n}"
        case PolyRing(p=p):
            return f"GF({p})[x]"
        case PolyQuotient(p=p, f=f):
            return f"GF({p})[x]/({format_poly(f)})"
        case Product(components=cs):
            return " x ".join(format_ring(c) for c in cs)
    raise TypeError(f"not a ring descriptor: {ring!r}")


def normalize_element(ring: RingSpec, value) -> RingElement:
    """Reduce a raw value into the canonical element representation of ring."""
    match ring:
        case Integers():
            if not isinstance(value, int):
                raise RingMismatchError(f"{value!r} is not an integer")
            check_natural(abs(value), "integer")
            return value
        case IntegersMod(n=n):
            if not isinstance(value, int):
                raise RingMismatchError(f"{value!r} is not an integer residue")
            return value % n
        case PolyRing(p=p):
            if isinstance(value, int):
                return PrimeFieldPoly.constant(p, value)
            _check_poly(value, p)
            return value
        case PolyQuotient(p=p, f=f):
            if isinstance(value, int):
                value = PrimeFieldPoly.constant(p, value)
            _check_poly(value, p)
            return value % f
        case Product(components=cs):
            if not isinstance(value, tuple) or len(value) != len(cs):
                raise RingMismatchError(
                    f"element {value!r} does not have arity {len(cs)} for {format_ring(ring)}"
                )
            return tuple(normalize_element(c, v) for c, v in zip(cs, value))
    raise TypeError(f"not a ring descriptor: {ring!r}")


def _check_poly(value, p: int) -> None:
    if not isinstance(value, PrimeFieldPoly) or value.p != p:
        raise RingMismatchError(f"{value!r} is not a GF({p}) polynomial")


def zero_element(ring: RingSpec) -> RingElement:
    match ring:
        case Integers() | IntegersMod():
            return 0
        case PolyRing(p=p) | PolyQuotient(p=p):
            return PrimeFieldPoly.zero(p)
        case Product(components=cs):
            return tuple(zero_element(c) for c in cs)
    raise TypeError(f"not a ring descriptor: {ring!r}")


def one_element(ring: RingSpec) -> RingElement:
    match ring:
        case Integers() | IntegersMod():
            return 1
        case PolyRing(p=p) | PolyQuotient(p=p):
            return PrimeFieldPoly.one(p)
        case Product(components=cs):
            return tuple(one_element(c) for c in cs)
    raise TypeError(f"not a ring descriptor: {ring!r}")


def element_add(ring: RingSpec, a: RingElement, b: RingElement) -> RingElement:
    match ring:
        case Integers():
            return checked_add(a, b)
        case IntegersMod(n=n):
            return (a + b) % n
        case PolyRing():
            return a + b
        case PolyQuotient(f=f):
            return (a + b) % f
        case Product(components=cs):
            return tuple(element_add(c, x, y) for c, x, y in zip(cs, a, b))
    raise TypeError(f"not a ring descriptor: {ring!r}")


def element_neg(ring: RingSpec, a: RingElement) -> RingElement:
    match ring:
        case Integers():
            return -a
        case IntegersMod(n=n):
            return -a % n
        case PolyRing() | PolyQuotient():
            return -a
        case Product(components=cs):
            return tuple(element_neg(c, x) for c, x in zip(cs, a))
    raise TypeError(f"not a ring descriptor: {ring!r}")


def element_mul(ring: RingSpec, a: RingElement, b: RingElement) -> RingElement:
    match ring:
        case Integers():
            return checked_mul(a, b)
        case IntegersMod(n=n):
            return a * b % n
        case PolyRing():
            return a * b
        case PolyQuotient(f=f):
            return a * b % f
        case Product(components=cs):
            return tuple(element_mul(c, x, y) for c, x, y in zip(cs, a, b))
    raise TypeError(f"not a ring descriptor: {ring!r}")


def element_is_zero(ring: RingSpec, a: RingElement) -> bool:
    return a == zero_element(ring)


def elements(ring: RingSpec, limit: int | None = None) -> Iterator[RingElement]:
    """Enumerate every element of a finite ring in a fixed order."""
    size = ring_size(ring)
    if limit is not None and size > limit:
        raise ResourceCapError(
            f"{format_ring(ring)} has {size} elements, above the element cap {limit}"
        )
    match ring:
        case IntegersMod(n=n):
            yield from range(n)
        case PolyQuotient(p=p, f=f):
            for tail in product(range(p), repeat=f.degree):
                yield PrimeFieldPoly.of(p, reversed(tail))
        case Product(components=cs):
            yield from product(*(list(elements(c)) for c in cs))


def format_element(ring: RingSpec, a: RingElement) -> str:
    match ring:
        case Integers() | IntegersMod():
            return str(a)
        case PolyRing() | PolyQuotient():
            return format_poly(a)
        case Product(components=cs):
            return "[" + ",".join(format_element(c, x) for c, x in zip(cs, a)) + "]"
    raise TypeError(f"not a ring descriptor: {ring!r}")
