"""Canonical ideals and their lattice operations.

Every ideal of a supported ring is stored by a single canonical generator:

- ``Z``: a nonnegative integer g (0 is the zero ideal, 1 the whole ring)
- ``Z/n``: a positive divisor d of n (d = n is the zero ideal)
- ``GF(p)[x]``: the zero polynomial or a monic generator
- ``GF(p)[x]/(f)``: a monic divisor g of f (g = f is the zero ideal)
- products: a tuple of component ideals

so two ideals are equal exactly when their representations are.
"""

import math
from dataclasses import dataclass
from functools import reduce
from itertools import product

from ..arith import (
    PrimeFieldPoly,
    divisors,
    factor_int,
    factor_poly,
    format_poly,
    monic_divisors,
    poly_gcd,
    poly_lcm,
    squarefree_part_int,
    squarefree_part_poly,
)
from ..arith.integers import checked_mul, lcm_int
from ..errors import NonProperIdealError, ResourceCapError, RingMismatchError
from .rings import (
    Integers,
    IntegersMod,
    PolyQuotient,
    PolyRing,
    Product,
    RingElement,
    RingSpec,
    element_mul,
    elements,
    format_element,
    format_ring,
    normalize_element,
    require_finite,
)


@dataclass(frozen=True)
class Ideal:
    ring: RingSpec
    rep: object

    def __str__(self) -> str:
        return format_ideal(self)


def make_ideal(ring: RingSpec, rep) -> Ideal:
    """Build an ideal from a canonical representation, validating it."""
    match ring:
        case Integers():
            if not isinstance(rep, int) or rep < 0:
                raise ValueError(f"ideal generator of Z must be a nonnegative integer, got {rep!r}")
        case IntegersMod(n=n):
            if not isinstance(rep, int) or rep < 1 or n % rep:
                raise ValueError(f"{rep!r} is not a positive divisor of {n}")
        case PolyRing(p=p):
            if not isinstance(rep, PrimeFieldPoly) or rep.p != p:
                raise RingMismatchError(f"{rep!r} is not a GF({p}) polynomial")
            if not rep.is_zero() and not rep.is_monic():
                raise ValueError(f"ideal generator {rep} must be zero or monic")
        case PolyQuotient(p=p, f=f):
            if not isinstance(rep, PrimeFieldPoly) or rep.p != p:
                raise RingMismatchError(f"{rep!r} is not a GF({p}) polynomial")
            if not rep.is_monic() or not rep.divides(f):
                raise ValueError(f"{rep} is not a monic divisor of {f}")
        case Product(components=cs):
            if not isinstance(rep, tuple) or len(rep) != len(cs):
                raise RingMismatchError(f"product ideal needs {len(cs)} components")
            if any(c.ring != r for c, r in zip(rep, cs)):
                raise RingMismatchError("component ideal over the wrong ring")
    return Ideal(ring, rep)


def _same_ring(i: Ideal, j: Ideal) -> RingSpec:
    if i.ring != j.ring:
        raise RingMismatchError(
            f"ideals live in different rings: {format_ring(i.ring)} vs {format_ring(j.ring)}"
        )
    return i.ring


def whole_ideal(ring: RingSpec) -> Ideal:
    match ring:
        case Integers() | IntegersMod():
            return Ideal(ring, 1)
        case PolyRing(p=p) | PolyQuotient(p=p):
            return Ideal(ring, PrimeFieldPoly.one(p))
        case Product(components=cs):
            return Ideal(ring, tuple(whole_ideal(c) for c in cs))
    raise TypeError(f"not a ring descriptor: {ring!r}")


def zero_ideal(ring: RingSpec) -> Ideal:
    match ring:
        case Integers():
            return Ideal(ring, 0)
        case IntegersMod(n=n):
            return Ideal(ring, n)
        case PolyRing(p=p):
            return Ideal(ring, PrimeFieldPoly.zero(p))
        case PolyQuotient(f=f):
            return Ideal(ring, f)
        case Product(components=cs):
            return Ideal(ring, tuple(zero_ideal(c) for c in cs))
    raise TypeError(f"not a ring descriptor: {ring!r}")


def is_proper(i: Ideal) -> bool:
    return i != whole_ideal(i.ring)


def is_zero_ideal(i: Ideal) -> bool:
    return i == zero_ideal(i.ring)


def require_proper(i: Ideal) -> None:
    if not is_proper(i):
        raise NonProperIdealError(f"{format_ideal(i)} is the whole ring {format_ring(i.ring)}")


def principal(ring: RingSpec, x: RingElement) -> Ideal:
    """The canonical form of the principal ideal Rx."""
    x = normalize_element(ring, x)
    match ring:
        case Integers():
            return Ideal(ring, abs(x))
        case IntegersMod(n=n):
            return Ideal(ring, math.gcd(x, n))
        case PolyRing():
            return Ideal(ring, x.monic())
        case PolyQuotient(p=p, f=f):
            return Ideal(ring, poly_gcd(p, x, f))
        case Product(components=cs):
            return Ideal(ring, tuple(principal(c, v) for c, v in zip(cs, x)))
    raise TypeError(f"not a ring descriptor: {ring!r}")


def generated_ideal(ring: RingSpec, gens) -> Ideal:
    """Ideal generated by finitely many elements (the gcd-reduced sum)."""
    gens = list(gens)
    if not gens:
        return zero_ideal(ring)
    return reduce(ideal_sum, (principal(ring, g) for g in gens))


def generator_element(i: Ideal) -> RingElement:
    """An element generating i; all supported ideals are principal."""
    match i.ring:
        case Integers() | PolyRing():
            return i.rep
        case IntegersMod(n=n):
            return i.rep % n
        case PolyQuotient(f=f):
            return i.rep % f
        case Product():
            return tuple(generator_element(c) for c in i.rep)
    raise TypeError(f"not a ring descriptor: {i.ring!r}")


def ideal_sum(i: Ideal, j: Ideal) -> Ideal:
    ring = _same_ring(i, j)
    match ring:
        case Integers() | IntegersMod():
            return Ideal(ring, math.gcd(i.rep, j.rep))
        case PolyRing(p=p) | PolyQuotient(p=p):
            return Ideal(ring, poly_gcd(p, i.rep, j.rep))
        case Product():
            return Ideal(ring, tuple(ideal_sum(a, b) for a, b in zip(i.rep, j.rep)))
    raise TypeError(f"not a ring descriptor: {ring!r}")


def ideal_intersect(i: Ideal, j: Ideal) -> Ideal:
    ring = _same_ring(i, j)
    match ring:
        case Integers():
            if i.rep == 0 or j.rep == 0:
                return Ideal(ring, 0)
            return Ideal(ring, lcm_int(i.rep, j.rep))
        case IntegersMod():
            return Ideal(ring, lcm_int(i.rep, j.rep))
        case PolyRing(p=p):
            if i.rep.is_zero() or j.rep.is_zero():
                return Ideal(ring, PrimeFieldPoly.zero(p))
            return Ideal(ring, poly_lcm(p, i.rep, j.rep))
        case PolyQuotient(p=p):
            return Ideal(ring, poly_lcm(p, i.rep, j.rep))
        case Product():
            return Ideal(ring, tuple(ideal_intersect(a, b) for a, b in zip(i.rep, j.rep)))
    raise TypeError(f"not a ring descriptor: {ring!r}")


def ideal_mul(i: Ideal, j: Ideal) -> Ideal:
    ring = _same_ring(i, j)
    match ring:
        case Integers():
            return Ideal(ring, checked_mul(i.rep, j.rep))
        case IntegersMod(n=n):
            # gcd(d1*d2, n) = d1*gcd(d2, n/d1) because d1 | n; no overflow.
            return Ideal(ring, i.rep * math.gcd(j.rep, n // i.rep))
        case PolyRing():
            return Ideal(ring, i.rep * j.rep)
        case PolyQuotient(p=p, f=f):
            return Ideal(ring, i.rep * poly_gcd(p, j.rep, f // i.rep))
        case Product():
            return Ideal(ring, tuple(ideal_mul(a, b) for a, b in zip(i.rep, j.rep)))
    raise TypeError(f"not a ring descriptor: {ring!r}")


def ideal_radical(i: Ideal) -> Ideal:
    match i.ring:
        case Integers() | IntegersMod():
            return Ideal(i.ring, squarefree_part_int(i.rep))
        case PolyRing() | PolyQuotient():
            return Ideal(i.ring, squarefree_part_poly(i.rep))
        case Product():
            return Ideal(i.ring, tuple(ideal_radical(c) for c in i.rep))
    raise TypeError(f"not a ring descriptor: {i.ring!r}")


def ideal_leq(i: Ideal, j: Ideal) -> bool:
    """I is contained in J, i.e. the generator of J divides that of I."""
    ring = _same_ring(i, j)
    match ring:
        case Integers() | IntegersMod():
            if j.rep == 0:
                return i.rep == 0
            return i.rep % j.rep == 0
        case PolyRing() | PolyQuotient():
            return j.rep.divides(i.rep)
        case Product():
            return all(ideal_leq(a, b) for a, b in zip(i.rep, j.rep))
    raise TypeError(f"not a ring descriptor: {ring!r}")


def contains(i: Ideal, x: RingElement) -> bool:
    return ideal_leq(principal(i.ring, x), i)


def enumerate_ideals(ring: RingSpec, max_ideals: int | None = None) -> list[Ideal]:
    """Every ideal of a finite ring, in divisor order (lexicographic for products)."""
    require_finite(ring)
    count = ideal_count(ring)
    if max_ideals is not None and count > max_ideals:
        raise ResourceCapError(
            f"{format_ring(ring)} has {count} ideals, above the cap of {max_ideals}"
        )
    match ring:
        case IntegersMod(n=n):
            return [Ideal(ring, d) for d in divisors(n)]
        case PolyQuotient(f=f):
            return [Ideal(ring, g) for g in monic_divisors(f)]
        case Product(components=cs):
            return [Ideal(ring, combo) for combo in product(*(enumerate_ideals(c) for c in cs))]
    raise TypeError(f"not a ring descriptor: {ring!r}")


def ideal_count(ring: RingSpec) -> int:
    require_finite(ring)
    match ring:
        case IntegersMod(n=n):
            return math.prod(e + 1 for e in factor_int(n).exponents)
        case PolyQuotient(f=f):
            return math.prod(e + 1 for e in factor_poly(f).exponents)
        case Product(components=cs):
            return math.prod(ideal_count(c) for c in cs)
    raise TypeError(f"not a ring descriptor: {ring!r}")


def enumerate_principal_reps(
    ring: RingSpec, max_ideals: int | None = None
) -> list[tuple[Ideal, RingElement]]:
    """One generating element per principal ideal.

    Membership conditions such as abc in I only depend on the ideals
    (a), (b), (c) because (abc) = (a)(b)(c), so quantifying over these
    representatives is the same as quantifying over all elements.
    """
    return [(i, generator_element(i)) for i in enumerate_ideals(ring, max_ideals)]


def maximal_ideals(ring: RingSpec, max_ideals: int | None = None) -> list[Ideal]:
    ideals = enumerate_ideals(ring, max_ideals)
    whole = whole_ideal(ring)
    proper = [i for i in ideals if i != whole]
    return [
        m for m in proper if not any(m != j and ideal_leq(m, j) for j in proper)
    ]


def is_maximal(i: Ideal, max_ideals: int | None = None) -> bool:
    return i in maximal_ideals(i.ring, max_ideals)


def idempotents(ring: RingSpec, max_elements: int | None = None) -> list[RingElement]:
    return [e for e in elements(ring, max_elements) if element_mul(ring, e, e) == e]


def crt_components(ring: RingSpec) -> list[tuple[object, int]]:
    """CRT factors of a finite PIR's modulus as (prime or irreducible, exponent)."""
    match ring:
        case IntegersMod(n=n):
            return list(factor_int(n).factors)
        case PolyQuotient(f=f):
            return list(factor_poly(f).factors)
    raise TypeError(f"{format_ring(ring)} is not Z/n or GF(p)[x]/(f)")


def format_ideal(i: Ideal) -> str:
    match i.ring:
        case Integers() | IntegersMod():
            return f"({generator_element(i)})"
        case PolyRing() | PolyQuotient():
            return f"({format_poly(generator_element(i))})"
        case Product(components=cs):
            parts = [
                "[" + format_element(c, generator_element(comp)) + "]"
                for c, comp in zip(cs, i.rep)
            ]
            return "(" + ",".join(parts) + ")"
    raise TypeError(f"not a ring descriptor: {i.ring!r}")
