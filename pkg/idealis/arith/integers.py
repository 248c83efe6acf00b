"""Checked integer arithmetic, primality and factorization below 2^63."""

import math
from dataclasses import dataclass
from functools import reduce

from ..errors import ArithmeticOverflowError

LIMIT = 1 << 63
TRIAL_DIVISION_BOUND = 10**6

# Deterministic for every n < 3.3 * 10^24, which covers the whole domain.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def check_natural(n: int, name: str = "value") -> int:
    if n < 0:
        raise ValueError(f"{name} must be nonnegative, got {n}")
    if n >= LIMIT:
        raise ArithmeticOverflowError(f"{name} {n} does not fit below 2^63")
    return n


def checked_add(a: int, b: int) -> int:
    s = a + b
    if abs(s) >= LIMIT:
        raise ArithmeticOverflowError(f"{a} + {b} overflows 2^63")
    return s


def checked_mul(a: int, b: int) -> int:
    m = a * b
    if abs(m) >= LIMIT:
        raise ArithmeticOverflowError(f"{a} * {b} overflows 2^63")
    return m


@dataclass(frozen=True)
class IntFactorization:
    value: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.factors)

    def product(self) -> int:
        return math.prod(p**e for p, e in self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def gcd_int(a: int, b: int) -> int:
    return math.gcd(a, b)


def lcm_int(a: int, b: int) -> int:
    if a == 0 or b == 0:
        raise ValueError("lcm arguments must be nonzero")
    return checked_mul(abs(a) // math.gcd(a, b), abs(b))


def lcm3_int(a: int, b: int, c: int) -> int:
    return lcm_int(lcm_int(a, b), c)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = pow(x, 2, n)
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite n."""
    for c in range(1, 64):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"Pollard-Brent failed to split {n}")


def _split_large(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _split_large(d, out)
    _split_large(n // d, out)


def factor_int(n: int) -> IntFactorization:
    """Factor 1 <= n < 2^63 into increasing prime powers."""
    check_natural(n)
    if n == 0:
        raise ValueError("cannot factor zero")
    found: dict[int, int] = {}
    m = n
    for p in (2, 3):
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
    p, step = 5, 2
    while p <= TRIAL_DIVISION_BOUND and p * p <= m:
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
        p += step
        step = 6 - step
    if m > 1:
        _split_large(m, found)
    return IntFactorization(n, tuple(sorted(found.items())))


def squarefree_part_int(n: int) -> int:
    """Product of the distinct primes dividing n (rad(n)); 0 maps to 0."""
    if n == 0:
        return 0
    return math.prod(factor_int(abs(n)).primes)


def divisors(n: int) -> list[int]:
    """All positive divisors of n in increasing order."""
    fact = factor_int(n)

    def extend(ds: list[int], pe: tuple[int, int]) -> list[int]:
        p, e = pe
        return [d * p**k for d in ds for k in range(e + 1)]

    return sorted(reduce(extend, fact.factors, [1]))
