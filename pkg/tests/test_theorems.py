import io

import pytest

from idealis.core import IntegersMod, format_ring
from idealis.errors import EmptyFamilyError, UnknownCheckError
from idealis.theorems import (
    CSV_COLUMNS,
    DEFAULT_CHECKS,
    CaseTally,
    CheckReport,
    SuiteConfig,
    get_registry,
    integers_mod_family,
    matrix_rings,
    poly_quotient_family,
    require_nonempty,
    run_check,
    run_suite,
    suite_status,
    write_csv_summary,
)

EMPTY = SuiteConfig(max_n=1, extra_n=(), gf2_max_deg=0, gf3_max_deg=0, products=())

# Small enough to run every check in a few seconds; still has three comaximal
# primes, von Neumann regular rings and a product ring.
SMALL = SuiteConfig(
    max_n=16,
    extra_n=(30,),
    gf2_max_deg=3,
    gf3_max_deg=2,
    products=("Z/2 x Z/3 x Z/5",),
    pid_bound=60,
    ufd_bound=120,
    ufd_transfer_bound=60,
    lcm_bound=60,
    comaximal_bound=60,
    triple_cover_max_n=20,
)


class TestFamilies:
    def test_integers_mod_family(self):
        assert [r.n for r in integers_mod_family(5, (4, 210))] == [2, 3, 4, 5, 210]

    def test_poly_quotient_family(self):
        assert len(poly_quotient_family(2, 2)) == 2 + 4
        assert len(poly_quotient_family(3, 2)) == 3 + 9

    def test_explicit_rings_replace_the_matrix(self):
        rings = matrix_rings(SuiteConfig(rings=("Z/12", "Z/4 x Z/9")))
        assert [format_ring(r) for r in rings] == ["Z/12", "Z/4 x Z/9"]

    def test_empty_families(self):
        with pytest.raises(EmptyFamilyError):
            matrix_rings(EMPTY)
        with pytest.raises(EmptyFamilyError, match="Z/n"):
            require_nonempty([], "Z/n")


class TestRegistry:
    def test_default_checks_in_order(self):
        ids = get_registry().list_checks()
        assert len(ids) == len(DEFAULT_CHECKS) == 20
        assert ids[0] == "check_triple_cover_equivalence"
        assert ids[-1] == "check_witness_validity"
        assert "check_pid_corollary" in get_registry().get_check_descriptions()

    def test_summary(self):
        summary = get_registry().get_checks_summary()
        assert summary.startswith("Available checks:")
        assert "  - check_zero_ideal_remark: " in summary

    def test_unknown_check_lists_the_available_ones(self):
        with pytest.raises(UnknownCheckError, match="check_oracle_agreement"):
            get_registry().get("check_bogus")

    def test_select_keeps_the_requested_order(self):
        selected = get_registry().select(["check_bezout_equivalence", "check_radical_theorem"])
        assert [c.check_id for c in selected] == ["check_bezout_equivalence", "check_radical_theorem"]


class TestReports:
    def test_vacuous_check_is_an_error(self):
        report = CaseTally("check_nothing").report()
        assert report.status == "error"
        assert report.message == "no cases: vacuous check"

    def test_first_counterexample_is_kept(self):
        tally = CaseTally("check_demo")
        ring = IntegersMod(6)
        tally.case(True, ring)
        tally.case(False, ring, detail="first")
        tally.case(False, ring, detail="second")
        report = tally.report()
        assert report.status == "fail" and report.cases == 3
        assert report.counterexample.detail == "first"

    def test_report_invariants(self):
        with pytest.raises(ValueError):
            CheckReport("check_demo", (), 0, "pass")
        with pytest.raises(ValueError):
            CheckReport("check_demo", (), 4, "fail")

    def test_suite_status(self):
        ok = CheckReport("a", (), 1, "pass")
        error = CheckReport("b", (), 0, "error", message="boom")
        assert suite_status([ok]) == "pass"
        assert suite_status([ok, error]) == "error"
        tally = CaseTally("c")
        tally.case(False, IntegersMod(2))
        assert suite_status([ok, error, tally.report()]) == "fail"


class TestChecks:
    def test_triple_cover_on_one_ring(self):
        report = run_check("check_triple_cover_equivalence", SuiteConfig(rings=("Z/12",)))
        assert report.status == "pass"
        assert report.cases == 5
        assert report.rings_tested == ("Z/12",)

    def test_empty_suite_is_rejected_before_running(self):
        with pytest.raises(EmptyFamilyError):
            run_suite(EMPTY)

    def test_empty_check_family_is_an_error_report(self):
        config = SuiteConfig(max_n=4, extra_n=(), gf2_max_deg=0, gf3_max_deg=0, products=(), triple_cover_max_n=1)
        report = run_check("check_triple_cover_equivalence", config)
        assert report.status == "error"
        assert "empty" in report.message

    def test_unknown_check(self):
        with pytest.raises(UnknownCheckError):
            run_check("check_bogus", SMALL)

    def test_mutated_rules_are_caught(self):
        report = run_check("check_oracle_agreement", SuiteConfig(rings=("Z/30",), mutate=True))
        assert report.status == "fail"
        assert report.counterexample.ring == "Z/30"
        assert report.counterexample.ideals == ("(0)",)
        assert report.counterexample.witness_items == ("(2)", "(3)", "(5)")

    def test_mutated_pid_rule_is_caught(self):
        config = SuiteConfig(pid_bound=40, gf2_max_deg=2, mutate=True)
        assert run_check("check_pid_corollary", config).status == "fail"
        assert run_check("check_pid_corollary", SuiteConfig(pid_bound=40, gf2_max_deg=2)).status == "pass"

    def test_lcm_form_criteria(self):
        config = SuiteConfig(lcm_bound=60, gf2_max_deg=3, gf3_max_deg=2)
        report = run_check("check_gcd_lcm_form", config)
        assert report.status == "pass"
        assert report.rings_tested == ("Z", "GF(2)[x]", "GF(3)[x]")

    def test_lcm_form_catches_three_prime_generators(self):
        config = SuiteConfig(lcm_bound=60, gf2_max_deg=0, gf3_max_deg=0, mutate=True)
        report = run_check("check_gcd_lcm_form", config)
        assert report.status == "fail"
        assert report.counterexample.ring == "Z"
        assert report.counterexample.ideals == ("(30)",)

    def test_every_check_passes_on_a_small_matrix(self):
        reports = run_suite(SMALL)
        failed = {r.theorem_id: r.counterexample or r.message for r in reports if r.status != "pass"}
        assert failed == {}
        assert suite_status(reports) == "pass"

    @pytest.mark.parametrize("threads", [1, 4])
    def test_reports_do_not_depend_on_threads(self, threads):
        config = SuiteConfig(rings=("Z/360", "Z/4 x Z/9"), threads=threads)
        baseline = run_check("check_witness_validity", SuiteConfig(rings=config.rings, threads=1))
        assert run_check("check_witness_validity", config) == baseline

    @pytest.mark.slow
    def test_default_suite(self):
        assert suite_status(run_suite()) == "pass"


def test_csv_summary():
    reports = [CheckReport("check_a", ("Z/6",), 3, "pass"), CheckReport("check_b", (), 0, "error", message="x")]
    out = io.StringIO()
    write_csv_summary(reports, out)
    assert out.getvalue() == ",".join(CSV_COLUMNS) + "\ncheck_a,3,pass\ncheck_b,0,error\n"


def test_csv_summary_to_path(tmp_path):
    path = tmp_path / "summary.csv"
    write_csv_summary([CheckReport("check_a", ("Z/6",), 3, "pass")], path)
    assert path.read_text(encoding="utf-8").splitlines() == ["theorem_id,cases,status", "check_a,3,pass"]
