"""Executable theorem checks over ring families.

A failing check means the implementation is wrong somewhere: every statement
replayed here is a proved theorem about the supported rings.
"""

import logging
from functools import reduce
from itertools import combinations, combinations_with_replacement
from operator import mul

from ..arith import (
    PrimeFieldPoly,
    divisors,
    factor_int,
    factor_poly,
    lcm3_int,
    lcm_int,
    monic_divisors,
    monic_polys,
    poly_lcm,
)
from ..classify import ORACLE, PREDICATES, Classification, implication_violations
from ..core import (
    Ideal,
    Integers,
    PolyRing,
    Product,
    RingSpec,
    contains,
    contract,
    extend,
    ideal_intersect,
    ideal_leq,
    ideal_mul,
    ideal_sum,
    is_proper,
    maximal_ideals,
    principal,
    quotient_map,
    ring_size,
    whole_ideal,
    zero_ideal,
)
from ..oracle import (
    ELEMENT_PREDICATES,
    element_level_results,
    find_irreducible_decomposition,
    idempotent_triple_condition_bf,
    irreducible_ideals_bf,
    is_arithmetical_bf,
    is_n_primary_bf,
    is_von_neumann_regular_bf,
    prime_ideals_bf,
    transfer_target,
    triple_cover_condition_bf,
    verify_witness,
)
from .base import CaseTally, CheckContext, TheoremCheck
from .families import explicit_family, integers_mod_family, matrix_rings, require_nonempty

logger = logging.getLogger(__name__)


def _rings(ctx: CheckContext, tally: CaseTally, rings: list[RingSpec] | None = None):
    for ring in rings if rings is not None else matrix_rings(ctx.config):
        tally.ring(ring)
        logger.debug(f"[{tally.theorem_id}] ring {tally.rings[-1]}")
        yield ring


def _ideals(ctx: CheckContext, tally: CaseTally, rings: list[RingSpec] | None = None):
    for ring in _rings(ctx, tally, rings):
        for i in ctx.proper_ideals(ring):
            yield ring, i


def _oracle_classification(ctx: CheckContext, i: Ideal) -> Classification:
    results = ctx.oracle(i)
    return Classification.from_verdicts(
        {p: results[p].holds for p in PREDICATES}, {p: ORACLE for p in PREDICATES}
    )


def _is_arithmetical(ctx: CheckContext, ring: RingSpec) -> bool:
    return is_arithmetical_bf(ring, ctx.threads, ctx.max_ideals).holds


class TripleCoverEquivalence(TheoremCheck):
    def __init__(self):
        super().__init__(
            check_id="check_triple_cover_equivalence",
            description="triple-cover condition <=> strongly 2-irreducible",
            statement="I is strongly 2-irreducible iff (Rx+Ry)∩(Rx+Rz)∩(Ry+Rz) ⊆ I forces "
            "one of the pairwise intersections of these sums into I",
        )

    def run(self, ctx, tally):
        config = ctx.config
        rings = explicit_family(config.rings) if config.rings else integers_mod_family(config.triple_cover_max_n)
        for ring, i in _ideals(ctx, tally, require_nonempty(rings, "Z/n")):
            cover = triple_cover_condition_bf(ring, i, ctx.threads, ctx.max_ideals)
            strong = ctx.oracle(i)["strongly_two_irreducible"]
            tally.case(
                cover.holds == strong.holds,
                ring,
                (i,),
                f"triple cover {cover.holds}, strongly 2-irreducible {strong.holds}",
                cover.witness or strong.witness,
            )


class ArithmeticalEquivalence(TheoremCheck):
    def __init__(self):
        super().__init__(
            check_id="check_arithmetical_equivalence",
            description="arithmetical rings: 2-irreducible <=> strongly 2-irreducible",
            statement="in an arithmetical ring a proper ideal is 2-irreducible iff it is strongly 2-irreducible",
        )

    def run(self, ctx, tally):
        for ring in _rings(ctx, tally):
            if not _is_arithmetical(ctx, ring):
                logger.info(f"[{self.check_id}] skipping non-arithmetical ring {tally.rings[-1]}")
                continue
            for i in ctx.proper_ideals(ring):
                two, strong = ctx.holds(i, "two_irreducible"), ctx.holds(i, "strongly_two_irreducible")
                tally.case(two == strong, ring, (i,), f"2-irreducible {two}, strongly 2-irreducible {strong}")


class RadicalTheorem(TheoremCheck):
    def __init__(self):
        super().__init__(
            check_id="check_radical_theorem",
            description="radical ideals: strongly 2-irreducible <=> 2-absorbing <=> prime or meet of two primes",
            statement="a radical ideal is strongly 2-irreducible iff it is 2-absorbing iff it is prime "
            "or an intersection of exactly two prime ideals",
        )

    def run(self, ctx, tally):
        for ring in _rings(ctx, tally):
            primes = prime_ideals_bf(ring, ctx.max_ideals)
            for i in ctx.proper_ideals(ring):
                if not ctx.holds(i, "radical"):
                    continue
                strong = ctx.holds(i, "strongly_two_irreducible")
                absorbing = ctx.holds(i, "two_absorbing")
                shape = i in primes or any(ideal_intersect(p, q) == i for p, q in combinations(primes, 2))
                tally.case(
                    strong == absorbing == shape,
                    ring,
                    (i,),
                    f"strongly 2-irreducible {strong}, 2-absorbing {absorbing}, prime or two primes {shape}",
                )


class RegularRingEquivalence(TheoremCheck):
    def __init__(self):
        super().__init__(
            check_id="check_vnr_equivalence",
            description="von Neumann regular rings: five equivalent conditions",
            statement="in a von Neumann regular ring 2-absorbing, 2-irreducible, strongly 2-irreducible, "
            "singly strongly 2-irreducible and the idempotent-triple condition coincide",
        )

    def run(self, ctx, tally):
        for ring in _rings(ctx, tally):
            if not is_von_neumann_regular_bf(ring, ctx.threads, ctx.max_ideals).holds:
                continue
            for i in ctx.proper_ideals(ring):
                idem = idempotent_triple_condition_bf(ring, i, ctx.max_ideals)
                values = {
                    "2-absorbing": ctx.holds(i, "two_absorbing"),
                    "2-irreducible": ctx.holds(i, "two_irreducible"),
                    "strongly 2-irreducible": ctx.holds(i, "strongly_two_irreducible"),
                    "singly strongly 2-irreducible": ctx.holds(i, "singly_strongly_two_irreducible"),
                    "idempotent triples": idem.holds,
                }
                tally.case(len(set(values.values())) == 1, ring, (i,), str(values), idem.witness)


class IntersectionOfStronglyIrreducibles(TheoremCheck):
    def __init__(self):
        super().__init__(
            check_id="check_intersection_two_strongly_irreducible",
            description="meet of two strongly irreducible ideals is strongly 2-irreducible",
            statement="if I1 and I2 are strongly irreducible then I1∩I2 is strongly 2-irreducible",
        )

    def run(self, ctx, tally):
        for ring in _rings(ctx, tally):
            strong = [i for i in ctx.proper_ideals(ring) if ctx.holds(i, "strongly_irreducible")]
            for a, b in combinations_with_replacement(strong, 2):
                meet = ideal_intersect(a, b)
                result = ctx.oracle(meet)["strongly_two_irreducible"]
                tally.case(result.holds, ring, (a, b, meet), "intersection is not strongly 2-irreducible", result.witness)


class NoetherianDecomposition(TheoremCheck):
    def __init__(self):
        super().__init__(
            check_id="check_noetherian_decomposition",
            description="2-irreducible <=> irreducible or meet of two irreducibles",
            statement="in a Noetherian ring a 2-irreducible ideal is irreducible or the intersection of "
            "exactly two irreducible ideals; in arithmetical rings every such intersection is 2-irreducible",
        )

    def run(self, ctx, tally):
        for ring in _rings(ctx, tally):
            for i in ctx.proper_ideals(ring):
                if ctx.holds(i, "two_irreducible"):
                    parts = find_irreducible_decomposition(ring, i, 2, ctx.max_ideals)
                    tally.case(parts is not None, ring, (i,), "no decomposition into two irreducible ideals")
            if not _is_arithmetical(ctx, ring):
                continue
            irreducible = irreducible_ideals_bf(ring, ctx.max_ideals)
            for a, b in combinations(irreducible, 2):
                meet = ideal_intersect(a, b)
                result = ctx.oracle(meet)["two_irreducible"]
                tally.case(result.holds, ring, (a, b, meet), "meet of two irreducibles is not 2-irreducible", result.witness)


class TwoAbsorbingPrimaryCorollary(TheoremCheck):
    def __init__(self):
        super().__init__(
            check_id="check_2absorbing_primary_corollary",
            description="2-irreducible => 2-absorbing primary",
            statement="a 2-irreducible ideal of a Noetherian ring is 2-absorbing primary",
        )

    def run(self, ctx, tally):
        for ring, i in _ideals(ctx, tally):
            if ctx.holds(i, "two_irreducible"):
                result = ctx.oracle(i)["two_absorbing_primary"]
                tally.case(result.holds, ring, (i,), "2-irreducible but not 2-absorbing primary", result.witness)


class ComaximalPrimes(TheoremCheck):
    def __init__(self):
        super().__init__(
            check_id="check_comaximal_primes",
            description="three pairwise comaximal primes: product is not 2-irreducible",
            statement="if P1, P2, P3 are pairwise comaximal primes then P1P2P3 is not 2-irreducible; "
            "a ring whose proper ideals are all 2-irreducible has at most two maximal ideals",
        )

    def run(self, ctx, tally):
        config = ctx.config
        for ring in _rings(ctx, tally):
            whole = whole_ideal(ring)
            primes = prime_ideals_bf(ring, ctx.max_ideals)
            for p, q, r in combinations(primes, 3):
                if not all(ideal_sum(a, b) == whole for a, b in ((p, q), (p, r), (q, r))):
                    continue
                product = ideal_mul(ideal_mul(p, q), r)
                result = ctx.oracle(product)["two_irreducible"]
                valid = result.holds is False and verify_witness(ring, product, "two_irreducible", result.witness)
                tally.case(valid, ring, (p, q, r, product), "product of comaximal primes is 2-irreducible")
            proper = ctx.proper_ideals(ring)
            if all(ctx.holds(i, "two_irreducible") for i in proper):
                count = len(maximal_ideals(ring, ctx.max_ideals))
                tally.case(count <= 2, ring, (), f"all ideals 2-irreducible but {count} maximal ideals")
        if config.rings:
            return
        for ring in _rings(ctx, tally, integers_mod_family(config.comaximal_bound)):
            if all(ctx.holds(i, "two_irreducible") for i in ctx.proper_ideals(ring)):
                omega = len(factor_int(ring.n).factors)
                tally.case(omega <= 2, ring, (), f"all ideals 2-irreducible but {omega} prime factors")


class HomomorphismCorrespondence(TheoremCheck):
    def __init__(self):
        super().__init__(
            check_id="check_hom_correspondence",
            description="quotient maps preserve the 2-irreducible properties",
            statement="along a surjection with kernel H ⊆ I: strongly 2-irreducible ideals extend to strongly "
            "2-irreducible ideals, I is 2-irreducible iff its extension is, and I/H inherits strong 2-irreducibility",
        )

    def run(self, ctx, tally):
        for ring in _rings(ctx, tally):
            proper = ctx.proper_ideals(ring)
            for h in proper:
                if not all(is_proper(c) for c in _component_ideals(h)):
                    continue
                qmap = quotient_map(ring, h)
                for i in proper:
                    if not ideal_leq(h, i):
                        continue
                    image = extend(qmap, i)
                    back = contract(qmap, image)
                    strong, strong_image = ctx.holds(i, "strongly_two_irreducible"), ctx.holds(image, "strongly_two_irreducible")
                    two, two_image = ctx.holds(i, "two_irreducible"), ctx.holds(image, "two_irreducible")
                    ok = back == i and (not strong or strong_image) and two == two_image
                    tally.case(
                        ok,
                        ring,
                        (h, i, image),
                        f"contract(extend(I)) = I: {back == i}; strongly 2-irreducible {strong} -> {strong_image}; "
                        f"2-irreducible {two} <-> {two_image}",
                    )


def _component_ideals(i: Ideal) -> tuple[Ideal, ...]:
    return i.rep if isinstance(i.ring, Product) else (i,)


class LaskerianDecomposition(TheoremCheck):
    def __init__(self):
        super().__init__(
            check_id="check_laskerian_decomposition",
            description="strongly 2-irreducible => primary or meet of two primaries",
            statement="in a Laskerian ring a strongly 2-irreducible ideal is primary or the intersection of two primary ideals",
        )

    def run(self, ctx, tally):
        for ring, i in _ideals(ctx, tally):
            if ctx.holds(i, "strongly_two_irreducible"):
                result = is_n_primary_bf(ring, i, 2, ctx.max_ideals)
                tally.case(result.holds, ring, (i,), "not an intersection of two primary ideals", result.witness)


class UfdSinglyStrongTheory(TheoremCheck):
    """Principal ideals (a) of Z only.

    Principality matters for "2-absorbing primary => singly strongly 2-irreducible".
    In F[x,y,z] the ideal <x, y^2, z^2> has maximal radical <x,y,z>, so it is primary
    and hence 2-absorbing primary. But (x+y+z)yz lies in it while (x+y+z)y, (x+y+z)z
    and yz do not, so it is not singly strongly 2-irreducible. The same ideal shows that
    being generated by prime powers and products of two prime powers is not sufficient.
    Multivariate rings are out of scope, so this case is documented here and not replayed.
    """

    def __init__(self):
        super().__init__(
            check_id="check_ufd_ssi_theory",
            description="UFD: singly strongly 2-irreducible <=> at most two prime-power factors",
            statement="a principal ideal (a) of a UFD is singly strongly 2-irreducible iff a is a prime power or a "
            "product of two prime powers; such ideals are 2-absorbing primary, and 2-absorbing ideals are singly "
            "strongly 2-irreducible",
        )

    def run(self, ctx, tally):
        config = ctx.config
        ring = Integers()
        tally.ring(ring)
        for a in range(2, config.ufd_bound + 1):
            i = principal(ring, a)
            shape = len(factor_int(a).factors) <= 2
            ssi = ctx.structural(i).singly_strongly_two_irreducible
            tally.case(ssi == shape, ring, (i,), f"singly strongly 2-irreducible {ssi}, shape rule {shape}")
            if a > config.ufd_transfer_bound:
                continue
            target_ring, target = transfer_target(ring, i)
            oracle = ctx.oracle(target)
            o_ssi = oracle["singly_strongly_two_irreducible"].holds
            tally.case(o_ssi == ssi, ring, (i,), f"transfer oracle {o_ssi}, structural {ssi}")
            tally.case(
                not o_ssi or oracle["two_absorbing_primary"].holds,
                ring,
                (i,),
                "singly strongly 2-irreducible but not 2-absorbing primary",
            )
            tally.case(
                not oracle["two_absorbing"].holds or o_ssi,
                ring,
                (i,),
                "2-absorbing but not singly strongly 2-irreducible",
            )


def _lcm(ring: RingSpec, x, y):
    if isinstance(ring, Integers):
        return lcm_int(x, y)
    return poly_lcm(ring.p, x, y)


def _lcm3(ring: RingSpec, x, y, z):
    if isinstance(ring, Integers):
        return lcm3_int(x, y, z)
    return poly_lcm(ring.p, poly_lcm(ring.p, x, y), z)


def _prime_power_parts(ring: RingSpec, m) -> list:
    if isinstance(ring, Integers):
        return [q**e for q, e in factor_int(m).factors]
    return [reduce(mul, [q] * e) for q, e in factor_poly(m).factors]


def _lcm_cases(config):
    """(ring, a, divisors of a, a few multiples of a) for Z and GF(2)[x], GF(3)[x].

    Divisors suffice for the lcm condition: lcm distributes over gcd, so x may be
    replaced by gcd(x, a) without changing any membership in (a).
    """
    for a in range(2, config.lcm_bound + 1):
        yield Integers(), a, divisors(a), [a * t for t in range(1, 7)]
    for p, max_deg in ((2, config.gf2_max_deg), (3, config.gf3_max_deg)):
        cofactors = [PrimeFieldPoly.one(p), *monic_polys(p, 1)]
        for d in range(1, max_deg + 1):
            for f in monic_polys(p, d):
                yield PolyRing(p), f, monic_divisors(f), [f * t for t in cofactors]


def _pair_product(ring: RingSpec, m, i: Ideal):
    """First product of one or two prime-power factors of m lying in i, or None."""
    parts = _prime_power_parts(ring, m)
    for size in (1, 2):
        for chosen in combinations(parts, size):
            g = reduce(mul, chosen)
            if contains(i, g):
                return g
    return None


class LcmFormCriteria(TheoremCheck):
    def __init__(self):
        super().__init__(
            check_id="check_gcd_lcm_form",
            description="GCD domain / UFD: lcm-form and prime-power criteria for singly strongly 2-irreducible",
            statement="(a) is singly strongly 2-irreducible iff [x,y,z] in (a) implies [x,y], [x,z] or [y,z] in (a); "
            "iff every product of prime powers in (a) has one or two of its prime-power factors whose product lies "
            "in (a); such ideals are generated by products of at most two prime powers",
        )

    def run(self, ctx, tally):
        seen = set()
        for ring, a, divs, multiples in _lcm_cases(ctx.config):
            if ring not in seen:
                seen.add(ring)
                tally.ring(ring)
            i = principal(ring, a)
            ssi = ctx.structural(i).singly_strongly_two_irreducible
            lcm_form = all(
                not contains(i, _lcm3(ring, x, y, z))
                or any(contains(i, _lcm(ring, u, v)) for u, v in ((x, y), (x, z), (y, z)))
                for x, y, z in combinations_with_replacement(divs, 3)
            )
            tally.case(lcm_form == ssi, ring, (i,), f"lcm form {lcm_form}, singly strongly 2-irreducible {ssi}")
            found = [_pair_product(ring, m, i) for m in multiples]
            criterion = all(g is not None for g in found)
            tally.case(criterion == ssi, ring, (i,), f"prime-power criterion {criterion}, singly strongly 2-irreducible {ssi}")
            if ssi and criterion:
                generated = reduce(ideal_sum, (principal(ring, g) for g in found))
                tally.case(generated == i, ring, (i,), f"prime-power products generate {generated}, not the ideal")


class OracleAgreement(TheoremCheck):
    def __init__(self):
        super().__init__(
            check_id="check_oracle_agreement",
            description="structural classification = brute-force oracle",
            statement="the structural rules and the definitional oracle agree on all ten predicates",
        )

    def run(self, ctx, tally):
        for ring, i in _ideals(ctx, tally):
            structural = ctx.structural(i)
            diff = structural.differences(_oracle_classification(ctx, i))
            witness = ctx.oracle(i)[diff[0]].witness if diff else None
            tally.case(
                not diff,
                ring,
                (i,),
                "disagreement on " + ", ".join(f"{p} (structural {getattr(structural, p)})" for p in diff),
                witness,
            )


class ImplicationLattice(TheoremCheck):
    def __init__(self):
        super().__init__(
            check_id="check_implication_lattice",
            description="the eight implications between the predicates",
            statement="prime => primary => 2-absorbing primary; strongly irreducible => irreducible => 2-irreducible; "
            "strongly irreducible => strongly 2-irreducible => 2-irreducible and singly strongly 2-irreducible; "
            "2-absorbing => 2-absorbing primary",
        )

    def run(self, ctx, tally):
        for ring, i in _ideals(ctx, tally):
            for engine, c in (("oracle", _oracle_classification(ctx, i)), ("structural", ctx.structural(i))):
                violations = implication_violations(c)
                tally.case(not violations, ring, (i,), f"{engine}: " + ", ".join(violations))


def _pid_generators(ctx: CheckContext):
    """(ring, generator, distinct prime count) for Z and GF(2)[x] up to the configured bounds."""
    config = ctx.config
    for a in range(2, config.pid_bound + 1):
        yield Integers(), a, len(factor_int(a).factors)
    for d in range(1, config.gf2_max_deg + 1):
        for f in monic_polys(2, d):
            yield PolyRing(2), f, len(factor_poly(f).factors)


class PidCorollary(TheoremCheck):
    def __init__(self):
        super().__init__(
            check_id="check_pid_corollary",
            description="PID: the four equivalent conditions agree, structurally and by transfer",
            statement="for a nonzero proper ideal of a PID: 2-irreducible, strongly 2-irreducible, 2-absorbing primary "
            "and having at most two prime-power factors are equivalent",
        )

    def run(self, ctx, tally):
        seen = set()
        for ring, g, k in _pid_generators(ctx):
            if ring not in seen:
                seen.add(ring)
                tally.ring(ring)
            i = principal(ring, g)
            c = ctx.structural(i)
            shape = k <= 2
            values = {c.two_irreducible, c.strongly_two_irreducible, c.two_absorbing_primary, shape}
            tally.case(len(values) == 1, ring, (i,), "structural verdicts of the equivalent conditions differ")
            target_ring, target = transfer_target(ring, i)
            o = ctx.oracle(target)
            found = {o["two_irreducible"].holds, o["strongly_two_irreducible"].holds, o["two_absorbing_primary"].holds}
            tally.case(found == {shape}, ring, (i,), f"oracle on the quotient gives {sorted(found)}, shape rule {shape}")


class DedekindTheorem(TheoremCheck):
    def __init__(self):
        super().__init__(
            check_id="check_dedekind_theorem",
            description="Dedekind domain: strongly irreducible <=> irreducible <=> primary <=> prime power",
            statement="a nonzero proper ideal of a Dedekind domain is strongly irreducible iff irreducible iff "
            "primary iff it is a power of a prime ideal",
        )

    def run(self, ctx, tally):
        seen = set()
        for ring, g, k in _pid_generators(ctx):
            if ring not in seen:
                seen.add(ring)
                tally.ring(ring)
            i = principal(ring, g)
            target_ring, target = transfer_target(ring, i)
            o = ctx.oracle(target)
            found = {o["strongly_irreducible"].holds, o["irreducible"].holds, o["primary"].holds}
            tally.case(found == {k == 1}, ring, (i,), f"oracle gives {sorted(found)}, prime power {k == 1}")
            tally.case(ctx.structural(i).strongly_irreducible == (k == 1), ring, (i,), "structural rule disagrees")


class ZeroIdealRemark(TheoremCheck):
    def __init__(self):
        super().__init__(
            check_id="check_zero_ideal_remark",
            description="zero ideal: 2-irreducible <=> strongly 2-irreducible",
            statement="the zero ideal is 2-irreducible iff it is strongly 2-irreducible",
        )

    def run(self, ctx, tally):
        for ring in _rings(ctx, tally):
            zero = zero_ideal(ring)
            two, strong = ctx.holds(zero, "two_irreducible"), ctx.holds(zero, "strongly_two_irreducible")
            tally.case(two == strong, ring, (zero,), f"2-irreducible {two}, strongly 2-irreducible {strong}")


class BezoutEquivalence(TheoremCheck):
    def __init__(self):
        super().__init__(
            check_id="check_bezout_equivalence",
            description="Bezout rings: singly strongly 2-irreducible <=> strongly 2-irreducible",
            statement="in a Bezout ring a proper ideal is singly strongly 2-irreducible iff it is strongly 2-irreducible",
        )

    def run(self, ctx, tally):
        for ring, i in _ideals(ctx, tally):
            single = ctx.holds(i, "singly_strongly_two_irreducible")
            strong = ctx.holds(i, "strongly_two_irreducible")
            tally.case(single == strong, ring, (i,), f"singly {single}, strongly {strong}")


class RepresentativeReduction(TheoremCheck):
    def __init__(self):
        super().__init__(
            check_id="check_representative_reduction",
            description="element quantifiers = principal-representative quantifiers",
            statement="membership conditions depend only on the principal ideals generated, so quantifying over "
            "one generator per principal ideal gives the same verdicts as quantifying over all elements",
        )

    def run(self, ctx, tally):
        limit = ctx.config.validation_max_elements
        small = [r for r in matrix_rings(ctx.config) if ring_size(r) <= limit]
        for ring, i in _ideals(ctx, tally, small):
            elementwise = element_level_results(ring, i, ctx.threads, ctx.max_ideals, limit)
            reps = dict(ctx.oracle(i))
            reps["triple_cover"] = triple_cover_condition_bf(ring, i, ctx.threads, ctx.max_ideals)
            for name in ELEMENT_PREDICATES:
                a, b = elementwise[name].holds, reps[name].holds
                tally.case(a == b, ring, (i,), f"{name}: elements {a}, representatives {b}", elementwise[name].witness)


class WitnessValidity(TheoremCheck):
    def __init__(self):
        super().__init__(
            check_id="check_witness_validity",
            description="every oracle witness replays as a violation",
            statement="each counterexample returned by the oracle violates the definition it refutes",
        )

    def run(self, ctx, tally):
        for ring in _rings(ctx, tally):
            for check in (is_arithmetical_bf, is_von_neumann_regular_bf):
                result = check(ring, ctx.threads, ctx.max_ideals)
                if not result.holds:
                    name = "arithmetical" if check is is_arithmetical_bf else "von_neumann_regular"
                    tally.case(verify_witness(ring, None, name, result.witness), ring, (), f"{name} witness", result.witness)
            for i in ctx.proper_ideals(ring):
                results = dict(ctx.oracle(i))
                results["triple_cover"] = triple_cover_condition_bf(ring, i, ctx.threads, ctx.max_ideals)
                for name, result in results.items():
                    if not result.holds:
                        ok = verify_witness(ring, i, name, result.witness)
                        tally.case(ok, ring, (i,), f"{name} witness does not replay", result.witness)


DEFAULT_CHECKS = (
    TripleCoverEquivalence,
    ArithmeticalEquivalence,
    RadicalTheorem,
    RegularRingEquivalence,
    IntersectionOfStronglyIrreducibles,
    NoetherianDecomposition,
    TwoAbsorbingPrimaryCorollary,
    ComaximalPrimes,
    HomomorphismCorrespondence,
    LaskerianDecomposition,
    UfdSinglyStrongTheory,
    LcmFormCriteria,
    OracleAgreement,
    ImplicationLattice,
    PidCorollary,
    DedekindTheorem,
    ZeroIdealRemark,
    BezoutEquivalence,
    RepresentativeReduction,
    WitnessValidity,
)
