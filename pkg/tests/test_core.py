from itertools import chain, combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from idealis.arith import PrimeFieldPoly, lcm_int, monic_polys, parse_poly, poly_lcm
from idealis.core import (
    Integers,
    IntegersMod,
    PolyQuotient,
    PolyRing,
    Product,
    contains,
    contract,
    crt_components,
    element_add,
    element_mul,
    elements,
    enumerate_ideals,
    extend,
    format_element,
    format_ideal,
    format_ring,
    ideal_count,
    ideal_intersect,
    ideal_leq,
    ideal_mul,
    ideal_radical,
    ideal_sum,
    idempotents,
    is_maximal,
    is_proper,
    make_product,
    map_element,
    maximal_ideals,
    parse_element,
    parse_ideal,
    parse_ring,
    principal,
    quotient_map,
    require_proper,
    ring_size,
    whole_ideal,
    zero_element,
    zero_ideal,
)
from idealis.errors import (
    InfiniteRingError,
    NonProperIdealError,
    ParseError,
    ResourceCapError,
    UnsupportedRingError,
)


class TestParsing:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("Z", "Z"),
            ("Z/12", "Z/12"),
            ("GF(2)[x]", "GF(2)[x]"),
            ("GF(3)[x]/(2*x^2+1)", "GF(3)[x]/(x^2+2)"),
            ("Z/4 x Z/9", "Z/4 x Z/9"),
            ("Z/2 × Z/3 x Z/5", "Z/2 x Z/3 x Z/5"),
            ("GF(2)[x]/(x^2) x Z/9", "GF(2)[x]/(x^2) x Z/9"),
        ],
    )
    def test_ring_round_trip(self, text, expected):
        assert format_ring(parse_ring(text)) == expected

    def test_products_are_flat(self):
        ring = parse_ring("Z/2 x Z/3 x Z/5")
        assert ring == Product((IntegersMod(2), IntegersMod(3), IntegersMod(5)))
        assert make_product(IntegersMod(2), make_product(IntegersMod(3), IntegersMod(5))) == ring

    @pytest.mark.parametrize(
        "text, position",
        [
            ("Z/1", 0),
            ("GF(4)[x]", 0),
            ("Q", 0),
            ("Z/4 + Z/9", 4),
            ("GF(2)[x]/(1)", 10),
        ],
    )
    def test_ring_errors(self, text, position):
        with pytest.raises(ParseError) as info:
            parse_ring(text)
        assert info.value.position == position

    def test_ideals(self):
        z12 = IntegersMod(12)
        assert parse_ideal(z12, "(8)") == principal(z12, 4)
        assert parse_ideal(z12, "(8, 6)") == principal(z12, 2)
        assert parse_ideal(Integers(), "(-6)") == principal(Integers(), 6)
        assert format_ideal(parse_ideal(IntegersMod(30), "(0)")) == "(0)"

    def test_product_ideal_needs_one_list_per_component(self):
        ring = parse_ring("Z/4 x Z/9")
        i = parse_ideal(ring, "([2],[3, 6])")
        assert format_ideal(i) == "([2],[3])"
        with pytest.raises(ParseError):
            parse_ideal(ring, "([2])")
        with pytest.raises(ParseError) as info:
            parse_ideal(ring, "([2,3])")
        assert "([g,...],[g,...])" in str(info.value)
        with pytest.raises(ParseError) as info:
            parse_ideal(ring, "(2, 3)")
        assert info.value.position == 1
        assert "bracketed generator list" in str(info.value)

    def test_elements(self):
        ring = parse_ring("GF(2)[x]/(x^3) x Z/9")
        x = parse_element(ring, "[x^4 + x, 11]")
        assert x == (PrimeFieldPoly.x(2), 2)
        assert format_element(ring, x) == "[x,2]"
        with pytest.raises(ParseError, match="components"):
            parse_element(ring, "[x]")
        with pytest.raises(ParseError, match="integer"):
            parse_element(IntegersMod(5), "x")


class TestIdeals:
    def test_enumeration_order(self):
        ring = IntegersMod(12)
        assert [format_ideal(i) for i in enumerate_ideals(ring)] == ["(1)", "(2)", "(3)", "(4)", "(6)", "(0)"]
        assert ideal_count(parse_ring("Z/4 x Z/9")) == 9
        assert ideal_count(parse_ring("GF(2)[x]/(x^3+x^2)")) == 6

    def test_cap(self):
        with pytest.raises(ResourceCapError):
            enumerate_ideals(IntegersMod(360), max_ideals=10)
        with pytest.raises(InfiniteRingError):
            enumerate_ideals(Integers())

    def test_lattice_operations_in_z12(self):
        ring = IntegersMod(12)
        i2, i3, i4, i6 = (principal(ring, k) for k in (2, 3, 4, 6))
        assert ideal_sum(i4, i6) == i2
        assert ideal_intersect(i4, i6) == zero_ideal(ring)
        assert ideal_intersect(i2, i3) == i6
        assert ideal_mul(i2, i6) == zero_ideal(ring)
        assert ideal_mul(i2, i2) == i4
        assert ideal_radical(i4) == i2
        assert ideal_radical(zero_ideal(ring)) == i6
        assert ideal_leq(i6, i2) and not ideal_leq(i2, i6)

    def test_integers_zero_ideal(self):
        z = Integers()
        assert ideal_intersect(zero_ideal(z), principal(z, 5)) == zero_ideal(z)
        assert ideal_leq(zero_ideal(z), principal(z, 5))
        assert not ideal_leq(principal(z, 5), zero_ideal(z))

    def test_polynomial_lattice(self):
        ring = PolyRing(2)
        f, g = (principal(ring, parse_poly(2, t)) for t in ("x^2+x", "x^2+1"))
        assert format_ideal(ideal_sum(f, g)) == "(x+1)"
        assert format_ideal(ideal_intersect(f, g)) == "(x^3+x)"
        assert format_ideal(ideal_radical(g)) == "(x+1)"

    def test_proper(self):
        ring = IntegersMod(12)
        assert not is_proper(whole_ideal(ring))
        with pytest.raises(NonProperIdealError):
            require_proper(principal(ring, 5))
        require_proper(principal(ring, 4))

    def test_maximal_ideals_and_idempotents(self):
        ring = IntegersMod(30)
        assert [format_ideal(m) for m in maximal_ideals(ring)] == ["(2)", "(3)", "(5)"]
        assert is_maximal(principal(ring, 3)) and not is_maximal(principal(ring, 6))
        assert idempotents(IntegersMod(6)) == [0, 1, 3, 4]
        with pytest.raises(ResourceCapError):
            idempotents(IntegersMod(100), max_elements=50)

    def test_crt_and_size(self):
        assert crt_components(IntegersMod(360)) == [(2, 3), (3, 2), (5, 1)]
        assert ring_size(parse_ring("GF(3)[x]/(x^2) x Z/4")) == 36
        assert len(list(elements(parse_ring("Z/2 x Z/3")))) == 6

    @given(st.integers(min_value=2, max_value=400), st.data())
    def test_lattice_laws(self, n, data):
        ideals = enumerate_ideals(IntegersMod(n))
        a, b, c = (data.draw(st.sampled_from(ideals)) for _ in range(3))
        # Z/n is arithmetical: the lattice is distributive
        assert ideal_intersect(ideal_sum(a, b), c) == ideal_sum(ideal_intersect(a, c), ideal_intersect(b, c))
        assert ideal_leq(ideal_mul(a, b), ideal_intersect(a, b))
        assert ideal_sum(a, ideal_intersect(a, b)) == a
        assert ideal_leq(a, ideal_radical(a))


class TestQuotient:
    def test_integers_mod(self):
        ring = IntegersMod(360)
        qmap = quotient_map(ring, principal(ring, 6))
        assert qmap.codomain == IntegersMod(6)
        assert map_element(qmap, 10) == 4
        image = extend(qmap, principal(ring, 2))
        assert format_ideal(image) == "(2)"
        assert contract(qmap, image) == principal(ring, 2)

    def test_polynomial_quotient(self):
        ring = parse_ring("GF(2)[x]/(x^3)")
        qmap = quotient_map(ring, parse_ideal(ring, "(x)"))
        assert qmap.codomain == PolyQuotient(2, PrimeFieldPoly.x(2))

    def test_infinite_domain_needs_nonzero_kernel(self):
        qmap = quotient_map(Integers(), principal(Integers(), 12))
        assert qmap.codomain == IntegersMod(12)
        with pytest.raises(UnsupportedRingError):
            quotient_map(Integers(), zero_ideal(Integers()))

    def test_product_needs_proper_components(self):
        ring = parse_ring("Z/4 x Z/9")
        qmap = quotient_map(ring, parse_ideal(ring, "([2],[3])"))
        assert qmap.codomain == parse_ring("Z/2 x Z/3")
        with pytest.raises(NonProperIdealError):
            quotient_map(ring, parse_ideal(ring, "([2],[1])"))


def _sample(ring, size=100):
    """Nonzero elements, some negative or non-monic, so normalization is exercised."""
    if isinstance(ring, Integers):
        return [k if k % 3 else -k for k in range(1, size + 1)]
    p = ring.p
    polys = chain.from_iterable(monic_polys(p, d) for d in range(0, 8))
    return [f * PrimeFieldPoly.constant(p, 1 + k % (p - 1)) for k, f in zip(range(size), polys)]


def _lcm(ring, x, y):
    return lcm_int(x, y) if isinstance(ring, Integers) else poly_lcm(ring.p, x, y)


@pytest.mark.parametrize("ring", [Integers(), PolyRing(2), PolyRing(3)], ids=format_ring)
def test_intersection_of_principal_ideals_is_the_lcm(ring):
    sample = _sample(ring)
    assert len(sample) == 100
    for x, y in product(sample, repeat=2):
        assert ideal_intersect(principal(ring, x), principal(ring, y)) == principal(ring, _lcm(ring, x, y))


LATTICE_RINGS = [
    "Z/12",
    "GF(2)[x]/(x^3+x^2)",
    "GF(3)[x]/(x^2+1)",
    "Z/4 x Z/9",
    "GF(2)[x]/(x^2) x Z/9",
    "GF(3)[x]/(x^2) x Z/4",
    "Z/2 x Z/3 x Z/5",
]


@pytest.mark.parametrize("ring_text", LATTICE_RINGS)
def test_lattice_and_radical_laws(ring_text):
    ideals = enumerate_ideals(parse_ring(ring_text))
    for a, b in product(ideals, repeat=2):
        meet, join = ideal_intersect(a, b), ideal_sum(a, b)
        assert meet == ideal_intersect(b, a) and join == ideal_sum(b, a)
        assert ideal_sum(a, meet) == a and ideal_intersect(a, join) == a
        assert ideal_leq(meet, a) and ideal_leq(a, join)
        assert ideal_leq(ideal_mul(a, b), meet)
        assert ideal_radical(meet) == ideal_intersect(ideal_radical(a), ideal_radical(b))
    for a in ideals:
        assert ideal_intersect(a, a) == a and ideal_sum(a, a) == a
        assert ideal_leq(a, ideal_radical(a))
        assert ideal_radical(ideal_radical(a)) == ideal_radical(a)
    for a, b, c in product(ideals, repeat=3):
        assert ideal_intersect(ideal_intersect(a, b), c) == ideal_intersect(a, ideal_intersect(b, c))
        assert ideal_sum(ideal_sum(a, b), c) == ideal_sum(a, ideal_sum(b, c))
        # every ring here is a principal ideal ring, hence arithmetical
        assert ideal_intersect(ideal_sum(a, b), c) == ideal_sum(ideal_intersect(a, c), ideal_intersect(b, c))


def _member_sets(ring):
    elems = list(elements(ring))
    return elems, [frozenset(e for e in elems if contains(i, e)) for i in enumerate_ideals(ring)]


def _closure(ring, elems, seeds):
    """Smallest subset containing seeds and 0, closed under + and multiplication by the ring."""
    closed: set = set()
    frontier = set(seeds) | {zero_element(ring)}
    while frontier:
        closed |= frontier
        found = {element_mul(ring, r, a) for a in frontier for r in elems}
        found |= {element_add(ring, a, b) for a in frontier for b in closed}
        frontier = found - closed
    return frozenset(closed)


def _is_ideal(ring, elems, subset):
    return (
        zero_element(ring) in subset
        and all(element_add(ring, a, b) in subset for a in subset for b in subset)
        and all(element_mul(ring, r, a) in subset for a in subset for r in elems)
    )


@pytest.mark.parametrize("ring_text", ["Z/6", "Z/8", "GF(2)[x]/(x^3+x^2)", "Z/2 x Z/4"])
def test_every_ideal_subset_is_enumerated_once(ring_text):
    ring = parse_ring(ring_text)
    elems, enumerated = _member_sets(ring)
    assert len(set(enumerated)) == len(enumerated)
    closed = {
        frozenset(s)
        for s in chain.from_iterable(combinations(elems, k) for k in range(1, len(elems) + 1))
        if _is_ideal(ring, elems, frozenset(s))
    }
    assert closed == set(enumerated)


@pytest.mark.parametrize("ring_text", ["Z/12", "Z/30", "Z/4 x Z/9", "GF(3)[x]/(x^2) x Z/4", "Z/2 x Z/3 x Z/5"])
def test_enumeration_matches_ideal_closures(ring_text):
    ring = parse_ring(ring_text)
    assert ring_size(ring) <= 36
    elems, enumerated = _member_sets(ring)
    assert len(set(enumerated)) == len(enumerated)
    reached = {_closure(ring, elems, ())}
    pending = list(reached)
    while pending:
        current = pending.pop()
        for r in elems:
            if r not in current:
                bigger = _closure(ring, elems, current | {r})
                if bigger not in reached:
                    reached.add(bigger)
                    pending.append(bigger)
    assert reached == set(enumerated)
