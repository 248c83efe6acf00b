import math

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import factorint, isprime

from idealis.arith import (
    checked_add,
    checked_mul,
    divisors,
    factor_int,
    is_prime,
    lcm3_int,
    lcm_int,
    squarefree_part_int,
)
from idealis.errors import ArithmeticOverflowError

positive = st.integers(min_value=1, max_value=10**12)


def test_factor_small_examples():
    assert factor_int(1).factors == ()
    assert factor_int(12).factors == ((2, 2), (3, 1))
    assert factor_int(360).factors == ((2, 3), (3, 2), (5, 1))
    assert str(factor_int(360)) == "2^3*3^2*5"


def test_factor_needs_pollard_for_large_semiprime():
    p, q = 1_000_003, 998_244_353
    assert factor_int(p * q).factors == ((p, 1), (q, 1))


def test_factor_rejects_zero_and_out_of_range():
    with pytest.raises(ValueError):
        factor_int(0)
    with pytest.raises(ArithmeticOverflowError):
        factor_int(1 << 63)


@given(positive)
def test_factor_matches_sympy(n):
    assert dict(factor_int(n).factors) == factorint(n)


@given(positive)
def test_factor_round_trip(n):
    assert factor_int(n).product() == n


@given(st.integers(min_value=0, max_value=10**15))
def test_primality_matches_sympy(n):
    assert is_prime(n) == isprime(n)


@given(positive, positive)
def test_gcd_times_lcm(a, b):
    assert math.gcd(a, b) * lcm_int(a, b) == a * b


def test_lcm3():
    assert lcm3_int(4, 6, 10) == 60
    with pytest.raises(ValueError):
        lcm_int(0, 3)


def test_checked_arithmetic_detects_overflow():
    assert checked_add(2, 3) == 5
    assert checked_mul(1 << 31, 1 << 31) == 1 << 62
    with pytest.raises(ArithmeticOverflowError):
        checked_mul(1 << 32, 1 << 31)
    with pytest.raises(ArithmeticOverflowError):
        checked_add((1 << 63) - 1, 1)


def test_squarefree_part_and_divisors():
    assert squarefree_part_int(360) == 30
    assert squarefree_part_int(0) == 0
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
