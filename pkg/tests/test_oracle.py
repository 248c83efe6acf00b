import pytest

from idealis.core import Integers, IntegersMod, parse_ring, principal, zero_ideal
from idealis.errors import InfiniteRingError, NonProperIdealError, ResourceCapError, WitnessError
from idealis.oracle import (
    Witness,
    build_lattice,
    classify_by_oracle,
    element_level_results,
    find_irreducible_decomposition,
    get_pool_manager,
    idempotent_triple_condition_bf,
    irreducible_ideals_bf,
    is_2_absorbing_bf,
    is_2_irreducible_bf,
    is_arithmetical_bf,
    is_irreducible_bf,
    is_n_primary_bf,
    is_prime_bf,
    is_radical_bf,
    is_strongly_2_irreducible_bf,
    is_von_neumann_regular_bf,
    oracle_results,
    prime_ideals_bf,
    search_tuples,
    transfer_target,
    verify_witness,
)


def described(result, ring):
    return result.witness.describe(ring)


class TestWitnesses:
    def test_prime_4z12(self, ideal):
        ring, i = ideal("Z/12", "(4)")
        result = is_prime_bf(ring, i)
        assert not result.holds
        assert result.witness.kind == "element-pair"
        assert described(result, ring) == ["2", "2"]

    def test_prime_zero_of_z6(self, ideal):
        ring, i = ideal("Z/6", "(0)")
        assert described(is_prime_bf(ring, i), ring) == ["2", "3"]

    def test_two_absorbing(self, ideal):
        ring, i = ideal("Z/30", "(0)")
        assert described(is_2_absorbing_bf(ring, i), ring) == ["2", "3", "5"]
        ring, i = ideal("Z/16", "(8)")
        assert described(is_2_absorbing_bf(ring, i), ring) == ["2", "2", "2"]

    def test_two_irreducible_zero_of_z30(self, ideal):
        ring, i = ideal("Z/30", "(0)")
        result = is_2_irreducible_bf(ring, i)
        assert result.witness.kind == "ideal-triple"
        assert described(result, ring) == ["(2)", "(3)", "(5)"]

    def test_irreducible_6z12(self, ideal):
        ring, i = ideal("Z/12", "(6)")
        assert described(is_irreducible_bf(ring, i), ring) == ["(2)", "(3)"]
        assert is_strongly_2_irreducible_bf(ring, i).holds

    def test_radical_witness_carries_exponent(self, ideal):
        ring, i = ideal("Z/12", "(4)")
        result = is_radical_bf(ring, i)
        assert result.witness.kind == "element-power"
        assert result.witness.items == (2,)
        assert result.witness.parameter == 2

    def test_ring_level(self):
        vnr = is_von_neumann_regular_bf(IntegersMod(4))
        assert not vnr.holds
        assert described(vnr, IntegersMod(4)) == ["(2)", "(2)"]
        assert is_von_neumann_regular_bf(IntegersMod(30)).holds
        assert is_arithmetical_bf(IntegersMod(360)).holds

    def test_product_ring_witness(self, ideal):
        ring, i = ideal("Z/2 x Z/3 x Z/5", "([0],[0],[0])")
        result = is_2_irreducible_bf(ring, i)
        assert not result.holds
        assert verify_witness(ring, i, "two_irreducible", result.witness)


class TestVerifyWitness:
    def test_every_failure_replays(self):
        for ring_text in ("Z/12", "Z/30", "GF(2)[x]/(x^3+x^2)", "Z/4 x Z/9"):
            ring = parse_ring(ring_text)
            table = build_lattice(ring)
            for k in table.proper():
                i = table.ideals[k]
                for name, result in oracle_results(ring, i).items():
                    if not result.holds:
                        assert verify_witness(ring, i, name, result.witness), (ring_text, str(i), name)

    def test_bogus_witness_is_rejected(self, ideal):
        ring, i = ideal("Z/12", "(4)")
        assert not verify_witness(ring, i, "prime", Witness("element-pair", (1, 2), ("a in I", "b in I")))

    def test_unknown_rule(self, ideal):
        ring, i = ideal("Z/12", "(4)")
        with pytest.raises(WitnessError):
            verify_witness(ring, i, "prime", Witness("ideal-triple", (), ()))


class TestDecompositions:
    def test_n_primary(self, ideal):
        ring, i = ideal("Z/12", "(6)")
        two = is_n_primary_bf(ring, i, 2)
        assert two.holds
        assert [str(q) for q in two.decomposition] == ["(2)", "(3)"]
        one = is_n_primary_bf(ring, i, 1)
        assert not one.holds
        assert one.witness.kind == "exhaustion" and one.witness.parameter == 1
        assert verify_witness(ring, i, "n_primary", one.witness)

    def test_irreducible_decomposition(self, ideal):
        ring, i = ideal("Z/12", "(6)")
        assert [str(q) for q in find_irreducible_decomposition(ring, i, 2)] == ["(2)", "(3)"]
        assert find_irreducible_decomposition(ring, i, 1) is None
        ring, zero = ideal("Z/30", "(0)")
        assert find_irreducible_decomposition(ring, zero, 2) is None
        with pytest.raises(ValueError):
            find_irreducible_decomposition(ring, zero, 3)

    def test_listings(self):
        ring = IntegersMod(12)
        assert [str(p) for p in prime_ideals_bf(ring)] == ["(2)", "(3)"]
        assert [str(q) for q in irreducible_ideals_bf(ring)] == ["(2)", "(3)", "(4)"]

    def test_idempotent_triples(self, ideal):
        ring, i = ideal("Z/30", "(0)")
        result = idempotent_triple_condition_bf(ring, i)
        assert not result.holds
        assert verify_witness(ring, i, "idempotent_triple", result.witness)
        ring, i = ideal("Z/30", "(6)")
        assert idempotent_triple_condition_bf(ring, i).holds


class TestTransferAndLimits:
    def test_transfer_target(self):
        ring = Integers()
        target_ring, target = transfer_target(ring, principal(ring, 12))
        assert target_ring == IntegersMod(12)
        assert target == zero_ideal(IntegersMod(12))
        with pytest.raises(InfiniteRingError):
            transfer_target(ring, zero_ideal(ring))

    def test_oracle_classification_provenance(self):
        c = classify_by_oracle(Integers(), principal(Integers(), 6))
        assert c.strongly_two_irreducible and not c.strongly_irreducible
        assert set(c.provenance.values()) == {"transfer-oracle"}
        c = classify_by_oracle(IntegersMod(12), principal(IntegersMod(12), 6))
        assert set(c.provenance.values()) == {"oracle"}

    def test_whole_ideal_is_rejected(self):
        with pytest.raises(NonProperIdealError):
            is_prime_bf(IntegersMod(12), principal(IntegersMod(12), 1))

    def test_ideal_cap(self):
        with pytest.raises(ResourceCapError):
            is_prime_bf(IntegersMod(360), zero_ideal(IntegersMod(360)), max_ideals=8)

    def test_infinite_ring(self):
        with pytest.raises(InfiniteRingError):
            is_prime_bf(Integers(), principal(Integers(), 6))


class TestSearch:
    def test_first_tuple_and_case_count(self):
        found, cases = search_tuples(range(5), 2, lambda t: sum(t) == 5)
        assert found == (1, 4)
        assert cases == 10

    @pytest.mark.parametrize("threads", [2, 3, 8])
    def test_threads_do_not_change_the_answer(self, threads):
        sequential = search_tuples(range(7), 3, lambda t: t[0] * t[1] * t[2] % 7 == 6, threads=1)
        assert search_tuples(range(7), 3, lambda t: t[0] * t[1] * t[2] % 7 == 6, threads=threads) == sequential
        assert threads in get_pool_manager().active

    @pytest.mark.parametrize("threads", [1, 4])
    def test_oracle_results_are_thread_independent(self, ideal, threads):
        ring, i = ideal("Z/360", "(0)")
        baseline = oracle_results(ring, i, threads=1)
        assert oracle_results(ring, i, threads=threads) == baseline

    def test_nothing_found(self):
        assert search_tuples(range(3), 2, lambda t: False) == (None, 9)


class TestElementLevel:
    @pytest.mark.parametrize("ring_text", ["Z/12", "Z/30", "GF(2)[x]/(x^3+x)", "Z/4 x Z/3"])
    def test_agrees_with_representatives(self, ring_text):
        ring = parse_ring(ring_text)
        table = build_lattice(ring)
        for k in table.proper():
            i = table.ideals[k]
            elementwise = element_level_results(ring, i)
            reps = oracle_results(ring, i)
            for name in ("prime", "primary", "two_absorbing", "two_absorbing_primary", "singly_strongly_two_irreducible"):
                assert elementwise[name].holds == reps[name].holds, (ring_text, str(i), name)

    def test_size_limit(self):
        with pytest.raises(ResourceCapError):
            element_level_results(IntegersMod(100), zero_ideal(IntegersMod(100)))
