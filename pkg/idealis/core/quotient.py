"""Quotient maps R -> R/H onto canonical models, with extension and contraction."""

import math
from dataclasses import dataclass, field

from ..arith import poly_gcd
from ..errors import RingMismatchError, UnsupportedRingError
from .ideals import Ideal, format_ideal, is_zero_ideal, require_proper
from .rings import (
    Integers,
    IntegersMod,
    PolyQuotient,
    PolyRing,
    Product,
    RingElement,
    RingSpec,
    format_ring,
    make_product,
    normalize_element,
)


@dataclass(frozen=True)
class QuotientMap:
    domain: RingSpec
    kernel: Ideal
    codomain: RingSpec
    parts: tuple["QuotientMap", ...] = field(default=(), compare=False)

    def __str__(self) -> str:
        return f"{format_ring(self.domain)} -> {format_ring(self.codomain)} (kernel {format_ideal(self.kernel)})"


def quotient_map(ring: RingSpec, h: Ideal) -> QuotientMap:
    if h.ring != ring:
        raise RingMismatchError(f"kernel {format_ideal(h)} is not an ideal of {format_ring(ring)}")
    require_proper(h)
    match ring:
        case Integers() | PolyRing():
            if is_zero_ideal(h):
                raise UnsupportedRingError(
                    f"zero kernel over the infinite ring {format_ring(ring)} has no finite model"
                )
            codomain = IntegersMod(h.rep) if isinstance(ring, Integers) else PolyQuotient(ring.p, h.rep)
            return QuotientMap(ring, h, codomain)
        case IntegersMod():
            return QuotientMap(ring, h, IntegersMod(h.rep))
        case PolyQuotient(p=p):
            return QuotientMap(ring, h, PolyQuotient(p, h.rep))
        case Product(components=cs):
            parts = tuple(quotient_map(c, k) for c, k in zip(cs, h.rep))
            return QuotientMap(ring, h, make_product(*(m.codomain for m in parts)), parts)
    raise TypeError(f"not a ring descriptor: {ring!r}")


def map_element(qmap: QuotientMap, x: RingElement) -> RingElement:
    x = normalize_element(qmap.domain, x)
    if qmap.parts:
        return tuple(map_element(m, v) for m, v in zip(qmap.parts, x))
    return normalize_element(qmap.codomain, x)


def extend(qmap: QuotientMap, i: Ideal) -> Ideal:
    """Image of an ideal of the domain (I^e)."""
    if i.ring != qmap.domain:
        raise RingMismatchError(f"{format_ideal(i)} is not an ideal of {format_ring(qmap.domain)}")
    if qmap.parts:
        return Ideal(qmap.codomain, tuple(extend(m, c) for m, c in zip(qmap.parts, i.rep)))
    k = qmap.kernel.rep
    match qmap.domain:
        case Integers() | IntegersMod():
            return Ideal(qmap.codomain, math.gcd(i.rep, k))
        case PolyRing(p=p) | PolyQuotient(p=p):
            return Ideal(qmap.codomain, poly_gcd(p, i.rep, k))
    raise TypeError(f"not a ring descriptor: {qmap.domain!r}")


def contract(qmap: QuotientMap, j: Ideal) -> Ideal:
    """Preimage of an ideal of the codomain (J^c)."""
    if j.ring != qmap.codomain:
        raise RingMismatchError(f"{format_ideal(j)} is not an ideal of {format_ring(qmap.codomain)}")
    if qmap.parts:
        return Ideal(qmap.domain, tuple(contract(m, c) for m, c in zip(qmap.parts, j.rep)))
    # Canonical generators of the codomain divide the kernel generator,
    # so they are already canonical in the domain.
    return Ideal(qmap.domain, j.rep)
