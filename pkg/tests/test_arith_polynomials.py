import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor

from idealis.arith import (
    MAX_EXPONENT,
    MAX_FACTOR_DEGREE,
    PrimeFieldPoly,
    certify_irreducible,
    certify_irreducible_exhaustive,
    factor_poly,
    format_poly,
    is_irreducible_poly,
    monic_divisors,
    monic_polys,
    parse_poly,
    poly_gcd,
    poly_lcm,
    squarefree_part_poly,
)
from idealis.arith import polynomials
from idealis.errors import FactorizationError, ParseError, ResourceCapError


def P(p, *coeffs):
    """Polynomial from coefficients, lowest degree first."""
    return PrimeFieldPoly.of(p, coeffs)


@st.composite
def monic_poly(draw, p=None, max_degree=8):
    p = p or draw(st.sampled_from([2, 3, 5, 7]))
    degree = draw(st.integers(min_value=1, max_value=max_degree))
    tail = draw(st.lists(st.integers(min_value=0, max_value=p - 1), min_size=degree, max_size=degree))
    return PrimeFieldPoly(p, tuple(tail) + (1,))


def _sympy_factors(f):
    _, factors = gf_factor([int(c) for c in reversed(f.coeffs)], f.p, ZZ)
    return sorted((tuple(int(c) for c in g), e) for g, e in factors)


def _our_factors(f):
    return sorted((tuple(reversed(q.coeffs)), e) for q, e in factor_poly(f).factors)


def test_parse_and_format():
    f = parse_poly(2, "x^3+x+1")
    assert f == P(2, 1, 1, 0, 1)
    assert format_poly(f) == "x^3+x+1"
    assert parse_poly(3, "2*x^2 - x + 4") == P(3, 1, 2, 2)
    assert format_poly(P(3, 1, 2, 2)) == "2*x^2+2*x+1"
    assert format_poly(PrimeFieldPoly.zero(5)) == "0"


def test_parse_errors_carry_position():
    with pytest.raises(ParseError, match="position 3"):
        parse_poly(2, "x+ y")
    with pytest.raises(ParseError):
        parse_poly(2, "x^2+")


def test_division_and_gcd():
    f = P(2, 0, 1, 1)  # x^2+x
    g = P(2, 1, 1)  # x+1
    q, r = divmod(f, g)
    assert q == PrimeFieldPoly.x(2) and r.is_zero()
    assert poly_gcd(2, f, P(2, 1, 0, 1)) == g  # x^2+1 = (x+1)^2
    assert poly_lcm(2, P(2, 0, 1), g) == f


def test_factor_known_examples():
    f = P(2, 0, 0, 1, 1)  # x^3+x^2 = x^2 (x+1)
    assert str(factor_poly(f)) == "(x)^2*(x+1)"
    assert factor_poly(P(2, 1, 0, 1)).factors == ((P(2, 1, 1), 2),)
    # x^4+1 = (x+1)^4 is a p-th power, so the root step runs
    assert factor_poly(P(2, 1, 0, 1) * P(2, 1, 0, 1)).factors == ((P(2, 1, 1), 4),)


@given(monic_poly())
def test_factor_matches_sympy(f):
    assert _our_factors(f) == _sympy_factors(f)


@given(monic_poly())
def test_factor_round_trip(f):
    assert factor_poly(f).product() == f


@given(monic_poly(max_degree=6))
def test_irreducibility_tests_agree(f):
    assert is_irreducible_poly(f) == certify_irreducible_exhaustive(f)
    assert is_irreducible_poly(f) == (factor_poly(f).factors == ((f, 1),))


def test_monic_polys_count_and_order():
    polys = list(monic_polys(2, 2))
    assert [format_poly(f) for f in polys] == ["x^2", "x^2+1", "x^2+x", "x^2+x+1"]
    assert len(list(monic_polys(3, 3))) == 27


def test_monic_divisors_and_squarefree_part():
    f = P(2, 0, 0, 1, 1)
    assert [format_poly(d) for d in monic_divisors(f)] == ["1", "x", "x+1", "x^2", "x^2+x", "x^3+x^2"]
    assert squarefree_part_poly(f) == P(2, 0, 1, 1)


def test_characteristic_is_checked():
    with pytest.raises(ValueError):
        PrimeFieldPoly.of(4, (1, 1))
    with pytest.raises(ValueError):
        PrimeFieldPoly.of(101, (1, 1))


def test_exponent_cap():
    assert parse_poly(2, f"x^{MAX_EXPONENT}").degree == MAX_EXPONENT
    with pytest.raises(ParseError, match="position 2") as info:
        parse_poly(2, "x+x^20000000")
    assert "exceeds" in str(info.value)


def test_factor_degree_cap():
    f = parse_poly(2, "x^12+1")  # (x+1)^4 (x^2+x+1)^4
    assert f.degree == MAX_FACTOR_DEGREE
    assert factor_poly(f).factors == ((P(2, 1, 1), 4), (P(2, 1, 1, 1), 4))
    with pytest.raises(ResourceCapError):
        factor_poly(parse_poly(2, "x^40+x^5+x^4+x^3+1"))


def test_every_factor_is_certified(monkeypatch):
    monkeypatch.setattr(polynomials, "certify_irreducible", lambda q: q.degree < 2)
    assert factor_poly(P(2, 0, 1, 1)).factors == ((P(2, 0, 1), 1), (P(2, 1, 1), 1))
    with pytest.raises(FactorizationError, match="x\\^2\\+x\\+1"):
        factor_poly(P(2, 1, 1, 1))


def test_large_certificates_use_the_gcd_test(monkeypatch):
    def exhaustive(f):
        raise AssertionError("exhaustive search over GF(97) sextics")

    monkeypatch.setattr(polynomials, "certify_irreducible_exhaustive", exhaustive)
    sextic = P(97, 0, 0, 0, 0, 0, 0, 1)
    assert polynomials.certify_candidates(sextic) > polynomials.MAX_CERTIFY_CANDIDATES
    assert not certify_irreducible.__wrapped__(sextic)
