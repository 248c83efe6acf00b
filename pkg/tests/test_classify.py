from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from idealis.arith import divisors
from idealis.classify import (
    MUTATED_RULES,
    PREDICATES,
    Classification,
    alias_of,
    classify,
    classify_with_engine,
    implication_violations,
    shape_of,
)
from idealis.core import Integers, IntegersMod, parse_ring, principal, zero_ideal
from idealis.errors import EngineDisagreementError, NonProperIdealError, RingMismatchError
from idealis.oracle import build_lattice, classify_by_oracle


def test_six_z_is_strongly_2_irreducible_but_not_irreducible(ideal):
    ring, i = ideal("Z", "(6)")
    c = classify(ring, i)
    assert c.strongly_two_irreducible and c.two_irreducible and c.singly_strongly_two_irreducible
    assert not c.strongly_irreducible and not c.irreducible and not c.prime
    assert c.radical and c.two_absorbing
    assert c.provenance["two_absorbing"] == "structural:radical.two-primes"
    assert c.provenance["two_irreducible"] == "structural:pid.two-prime-powers"


def test_non_radical_pid_ideal_uses_transfer_oracle(ideal):
    ring, i = ideal("Z", "(12)")
    c = classify(ring, i)
    assert not c.two_absorbing
    assert c.two_absorbing_primary
    assert c.provenance["two_absorbing"] == "transfer-oracle"


def test_zero_ideal_of_a_pid():
    c = classify(Integers(), zero_ideal(Integers()))
    assert all(c.verdicts().values())
    assert set(c.provenance.values()) == {"structural:pid.zero-prime"}


def test_polynomial_pid(ideal):
    ring, i = ideal("GF(2)[x]", "(x^2+x)")
    c = classify(ring, i)
    assert c.two_absorbing and c.strongly_two_irreducible and not c.primary
    ring, i = ideal("GF(2)[x]", "(x^2+x+1)")
    assert classify(ring, i).prime


def test_whole_ideal_is_rejected(ideal):
    ring, i = ideal("Z", "(1)")
    with pytest.raises(NonProperIdealError):
        classify(ring, i)


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        classify(IntegersMod(12), principal(IntegersMod(6), 2))


def test_shape_of(ideal):
    shape = shape_of(ideal("Z/360", "(0)")[1])
    assert shape.distinct_prime_count == 3
    assert shape.exponents == (3, 2, 1)
    assert not shape.squarefree
    with pytest.raises(ValueError):
        shape_of(zero_ideal(Integers()))


def test_finite_pir_two_absorbing_falls_back_to_oracle(ideal):
    ring, i = ideal("Z/12", "(4)")
    c = classify(ring, i)
    assert c.primary and not c.prime and not c.radical
    assert c.provenance["two_absorbing"] == "oracle"
    assert c.provenance["prime"] == "structural:pir.prime"


class TestProducts:
    def test_two_prime_components(self, ideal):
        ring, i = ideal("Z/4 x Z/9", "([2],[3])")
        c = classify(ring, i)
        assert not c.prime and not c.irreducible
        assert c.two_absorbing and c.strongly_two_irreducible and c.radical
        assert c.provenance["two_absorbing"] == "structural:product"

    def test_one_proper_component_inherits(self, ideal):
        ring, i = ideal("Z/4 x Z/9", "([1],[3])")
        c = classify(ring, i)
        assert c.prime and c.irreducible
        assert c.provenance["prime"] == "structural:pir.prime"

    def test_three_proper_components(self, ideal):
        ring, i = ideal("Z/2 x Z/3 x Z/5", "([0],[0],[0])")
        c = classify(ring, i)
        assert not any(getattr(c, p) for p in PREDICATES if p != "radical")
        assert c.radical

    def test_oracle_provenance_passes_through(self, ideal):
        ring, i = ideal("Z/4 x Z/9", "([0],[1])")
        c = classify(ring, i)
        assert c.provenance["two_absorbing"] == "oracle"


AGREEMENT_RINGS = [
    "Z/12",
    "Z/30",
    "Z/72",
    "GF(2)[x]/(x^3+x^2)",
    "GF(3)[x]/(x^3+2*x)",
    "Z/4 x Z/9",
    "Z/2 x Z/3 x Z/5",
    "GF(2)[x]/(x^2) x Z/3",
]


@pytest.mark.parametrize("ring_text", AGREEMENT_RINGS)
def test_structural_agrees_with_oracle(ring_text):
    ring = parse_ring(ring_text)
    table = build_lattice(ring)
    for k in table.proper():
        i = table.ideals[k]
        structural = classify(ring, i)
        oracle = classify_by_oracle(ring, i)
        assert structural.differences(oracle) == [], (ring_text, str(i))
        assert implication_violations(oracle) == []


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=2, max_value=180), st.data())
def test_engines_agree_on_integers_mod_n(n, data):
    d = data.draw(st.sampled_from(divisors(n)[1:]))
    ring = IntegersMod(n)
    classify_with_engine(ring, principal(ring, d), "both")


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=2, max_value=2000))
def test_pid_transfer_matches_structural(a):
    ring = Integers()
    i = principal(ring, a)
    assert classify(ring, i).differences(classify_by_oracle(ring, i)) == []


class TestMutation:
    def test_bound_three_accepts_three_primes(self, ideal):
        ring, i = ideal("Z/30", "(0)")
        assert not classify(ring, i).two_irreducible
        assert classify(ring, i, MUTATED_RULES).two_irreducible

    def test_engine_both_reports_disagreement(self, ideal):
        ring, i = ideal("Z/30", "(0)")
        with pytest.raises(EngineDisagreementError, match="two_irreducible"):
            classify_with_engine(ring, i, "both", MUTATED_RULES)

    def test_unknown_engine(self, ideal):
        ring, i = ideal("Z/30", "(0)")
        with pytest.raises(ValueError):
            classify_with_engine(ring, i, "guess")


class TestModel:
    def test_implication_violations(self):
        c = replace(Classification.uniform(False, "oracle"), prime=True)
        assert implication_violations(c) == ["prime => primary"]

    def test_from_verdicts_requires_every_predicate(self):
        with pytest.raises(ValueError):
            Classification.from_verdicts({"prime": True}, {"prime": "oracle"})

    def test_provenance_does_not_affect_equality(self):
        assert Classification.uniform(True, "oracle") == Classification.uniform(True, "structural:product")

    def test_alias_of(self):
        assert alias_of("strongly_two_irreducible") == "strongly-2-irreducible"
        with pytest.raises(KeyError):
            alias_of("maximal")
