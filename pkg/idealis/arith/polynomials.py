"""Dense univariate polynomials over GF(p), p <= 97, and their factorization."""

import random
import re
from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import product

from ..errors import FactorizationError, ParseError, ResourceCapError, RingMismatchError
from .integers import is_prime

MAX_CHARACTERISTIC = 97
_CHARACTERISTICS = frozenset(q for q in range(2, MAX_CHARACTERISTIC + 1) if is_prime(q))

# Factorization works up to this degree; parsed terms may go up to MAX_EXPONENT.
MAX_FACTOR_DEGREE = 12
MAX_EXPONENT = 64

# Above this many candidate divisors a factor is certified by the gcd test instead.
MAX_CERTIFY_CANDIDATES = 200_000

# Seed for equal-degree splitting; the sorted output does not depend on it.
_SPLIT_SEED = 0x1DEA15


def check_characteristic(p: int) -> int:
    if p not in _CHARACTERISTICS:
        raise ValueError(f"characteristic must be a prime <= {MAX_CHARACTERISTIC}, got {p}")
    return p


@dataclass(frozen=True)
class PrimeFieldPoly:
    """Polynomial over GF(p); ``coeffs`` runs from low to high degree."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.p not in _CHARACTERISTICS:
            check_characteristic(self.p)
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero; use PrimeFieldPoly.of")

    @classmethod
    def of(cls, p: int, coeffs) -> "PrimeFieldPoly":
        c = [int(a) % p for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        return cls(p, tuple(c))

    @classmethod
    def zero(cls, p: int) -> "PrimeFieldPoly":
        return cls(p, ())

    @classmethod
    def one(cls, p: int) -> "PrimeFieldPoly":
        return cls(p, (1,))

    @classmethod
    def x(cls, p: int) -> "PrimeFieldPoly":
        return cls(p, (0, 1))

    @classmethod
    def constant(cls, p: int, c: int) -> "PrimeFieldPoly":
        return cls.of(p, (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return self.lc == 1

    def sort_key(self) -> tuple:
        return (self.degree, tuple(reversed(self.coeffs)))

    def monic(self) -> "PrimeFieldPoly":
        if self.is_zero() or self.lc == 1:
            return self
        inv = pow(self.lc, self.p - 2, self.p)
        return PrimeFieldPoly(self.p, tuple(a * inv % self.p for a in self.coeffs))

    def _same_field(self, other: "PrimeFieldPoly") -> None:
        if self.p != other.p:
            raise RingMismatchError(f"GF({self.p}) and GF({other.p}) polynomials do not mix")

    def __add__(self, other: "PrimeFieldPoly") -> "PrimeFieldPoly":
        self._same_field(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return PrimeFieldPoly.of(self.p, out)

    def __neg__(self) -> "PrimeFieldPoly":
        return PrimeFieldPoly(self.p, tuple(-a % self.p for a in self.coeffs))

    def __sub__(self, other: "PrimeFieldPoly") -> "PrimeFieldPoly":
        return self + (-other)

    def __mul__(self, other: "PrimeFieldPoly") -> "PrimeFieldPoly":
        self._same_field(other)
        if self.is_zero() or other.is_zero():
            return PrimeFieldPoly.zero(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PrimeFieldPoly.of(self.p, out)

    def __divmod__(self, other: "PrimeFieldPoly") -> tuple["PrimeFieldPoly", "PrimeFieldPoly"]:
        self._same_field(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        dg = other.degree
        if len(rem) <= dg:
            return PrimeFieldPoly.zero(p), self
        inv = pow(other.lc, p - 2, p)
        quot = [0] * (len(rem) - dg)
        for k in range(len(rem) - 1, dg - 1, -1):
            c = rem[k] * inv % p
            if c:
                quot[k - dg] = c
                for j, b in enumerate(other.coeffs):
                    rem[k - dg + j] = (rem[k - dg + j] - c * b) % p
        return PrimeFieldPoly.of(p, quot), PrimeFieldPoly.of(p, rem[:dg])

    def __floordiv__(self, other: "PrimeFieldPoly") -> "PrimeFieldPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "PrimeFieldPoly") -> "PrimeFieldPoly":
        return divmod(self, other)[1]

    def divides(self, other: "PrimeFieldPoly") -> bool:
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def derivative(self) -> "PrimeFieldPoly":
        return PrimeFieldPoly.of(self.p, [i * a for i, a in enumerate(self.coeffs)][1:])

    def __call__(self, value: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = (acc * value + a) % self.p
        return acc

    def __str__(self) -> str:
        return format_poly(self)


def poly_add(p: int, f: PrimeFieldPoly, g: PrimeFieldPoly) -> PrimeFieldPoly:
    _check_pair(p, f, g)
    return f + g


def poly_mul(p: int, f: PrimeFieldPoly, g: PrimeFieldPoly) -> PrimeFieldPoly:
    _check_pair(p, f, g)
    return f * g


def poly_divmod(p: int, f: PrimeFieldPoly, g: PrimeFieldPoly) -> tuple[PrimeFieldPoly, PrimeFieldPoly]:
    _check_pair(p, f, g)
    return divmod(f, g)


def poly_gcd(p: int, f: PrimeFieldPoly, g: PrimeFieldPoly) -> PrimeFieldPoly:
    """Monic gcd (zero only when both inputs are zero)."""
    _check_pair(p, f, g)
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(p: int, f: PrimeFieldPoly, g: PrimeFieldPoly) -> PrimeFieldPoly:
    if f.is_zero() or g.is_zero():
        raise ValueError("lcm arguments must be nonzero")
    return (f // poly_gcd(p, f, g) * g).monic()


def _check_pair(p: int, f: PrimeFieldPoly, g: PrimeFieldPoly) -> None:
    if f.p != p or g.p != p:
        raise RingMismatchError(f"expected GF({p}) polynomials, got GF({f.p}) and GF({g.p})")


def poly_powmod(f: PrimeFieldPoly, n: int, modulus: PrimeFieldPoly) -> PrimeFieldPoly:
    result = PrimeFieldPoly.one(f.p) % modulus
    base = f % modulus
    while n:
        if n & 1:
            result = result * base % modulus
        base = base * base % modulus
        n >>= 1
    return result


@dataclass(frozen=True)
class PolyFactorization:
    value: PrimeFieldPoly
    factors: tuple[tuple[PrimeFieldPoly, int], ...]

    @property
    def irreducibles(self) -> tuple[PrimeFieldPoly, ...]:
        return tuple(q for q, _ in self.factors)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.factors)

    def product(self) -> PrimeFieldPoly:
        one = PrimeFieldPoly.one(self.value.p)
        return reduce(lambda acc, qe: acc * _pow(qe[0], qe[1]), self.factors, one)

    def __str__(self) -> str:
        parts = [f"({q})^{e}" if e > 1 else f"({q})" for q, e in self.factors]
        return "*".join(parts) or "1"


def _pow(f: PrimeFieldPoly, n: int) -> PrimeFieldPoly:
    return reduce(lambda acc, _: acc * f, range(n), PrimeFieldPoly.one(f.p))


def _pth_root(f: PrimeFieldPoly) -> PrimeFieldPoly:
    # Frobenius is the identity on GF(p), so only exponents need dividing.
    return PrimeFieldPoly.of(f.p, f.coeffs[:: f.p])


def squarefree_decomposition(f: PrimeFieldPoly) -> list[tuple[PrimeFieldPoly, int]]:
    """Yun-style decomposition of a monic f into squarefree parts with multiplicities."""
    p = f.p
    out: list[tuple[PrimeFieldPoly, int]] = []
    c = poly_gcd(p, f, f.derivative())
    w = f // c
    i = 1
    while not w.is_one():
        y = poly_gcd(p, w, c)
        z = w // y
        if not z.is_one():
            out.append((z, i))
        i += 1
        w = y
        c = c // y
    if not c.is_one():
        for g, m in squarefree_decomposition(_pth_root(c)):
            out.append((g, m * p))
    return out


def _distinct_degree(f: PrimeFieldPoly) -> list[tuple[PrimeFieldPoly, int]]:
    p = f.p
    x = PrimeFieldPoly.x(p)
    out = []
    rest = f
    h = x % rest
    d = 1
    while rest.degree >= 2 * d:
        h = poly_powmod(h, p, rest)
        g = poly_gcd(p, rest, h - x)
        if not g.is_one():
            out.append((g, d))
            rest = rest // g
            h = h % rest
        d += 1
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def _equal_degree(f: PrimeFieldPoly, d: int, rng: random.Random) -> list[PrimeFieldPoly]:
    p = f.p
    n = f.degree
    if n == d:
        return [f]
    pending = [f]
    done: list[PrimeFieldPoly] = []
    while pending:
        u = pending.pop()
        if u.degree == d:
            done.append(u)
            continue
        while True:
            h = PrimeFieldPoly.of(p, [rng.randrange(p) for _ in range(u.degree)])
            if h.degree < 1:
                continue
            if p == 2:
                t, power = h, h
                for _ in range(d - 1):
                    power = power * power % u
                    t = t + power
            else:
                t = poly_powmod(h, (p**d - 1) // 2, u) - PrimeFieldPoly.one(p)
            g = poly_gcd(p, u, t)
            if 0 < g.degree < u.degree:
                pending.extend([g, u // g])
                break
    return done


def factor_poly(f: PrimeFieldPoly) -> PolyFactorization:
    """Factor a monic nonconstant polynomial into sorted monic irreducible powers."""
    if f.degree < 1:
        raise ValueError(f"cannot factor constant polynomial {f}")
    if not f.is_monic():
        raise ValueError(f"polynomial {f} is not monic")
    if f.degree > MAX_FACTOR_DEGREE:
        raise ResourceCapError(f"cannot factor {f}: degree {f.degree} exceeds {MAX_FACTOR_DEGREE}")
    rng = random.Random(_SPLIT_SEED)
    found: dict[PrimeFieldPoly, int] = {}
    for part, mult in squarefree_decomposition(f):
        for block, d in _distinct_degree(part):
            for q in _equal_degree(block, d, rng):
                found[q] = found.get(q, 0) + mult
    factors = tuple(sorted(found.items(), key=lambda qe: qe[0].sort_key()))
    for q, _ in factors:
        if not certify_irreducible(q):
            raise FactorizationError(f"factor {q} of {f} failed irreducibility certification")
    return PolyFactorization(f, factors)


def squarefree_part_poly(f: PrimeFieldPoly) -> PrimeFieldPoly:
    """Product of the distinct monic irreducible factors of f (zero stays zero)."""
    if f.is_zero():
        return f
    f = f.monic()
    if f.degree == 0:
        return f
    return reduce(lambda acc, q: acc * q, factor_poly(f).irreducibles, PrimeFieldPoly.one(f.p))


def is_irreducible_poly(f: PrimeFieldPoly) -> bool:
    if f.degree < 1:
        return False
    p = f.p
    g = f.monic()
    x = PrimeFieldPoly.x(p)
    h = x
    for _ in range(g.degree // 2):
        h = poly_powmod(h, p, g)
        if not poly_gcd(p, h - x, g).is_one():
            return False
    return True


def monic_polys(p: int, degree: int):
    """All monic polynomials of the given degree, in canonical order."""
    for tail in product(range(p), repeat=degree):
        yield PrimeFieldPoly(p, tuple(reversed(tail)) + (1,))


def certify_irreducible_exhaustive(f: PrimeFieldPoly) -> bool:
    """Irreducible iff no monic divisor of degree 1..deg/2 exists."""
    if f.degree < 1:
        return False
    return not any(
        g.divides(f) for d in range(1, f.degree // 2 + 1) for g in monic_polys(f.p, d)
    )


def certify_candidates(f: PrimeFieldPoly) -> int:
    """Number of monic polynomials the exhaustive certificate for f has to try."""
    return sum(f.p**d for d in range(1, f.degree // 2 + 1))


@lru_cache(maxsize=4096)
def certify_irreducible(f: PrimeFieldPoly) -> bool:
    """Exhaustive divisor search while it stays within MAX_CERTIFY_CANDIDATES, else the gcd test."""
    if certify_candidates(f) <= MAX_CERTIFY_CANDIDATES:
        return certify_irreducible_exhaustive(f)
    return is_irreducible_poly(f)


def monic_divisors(f: PrimeFieldPoly) -> list[PrimeFieldPoly]:
    if not f.is_monic():
        raise ValueError(f"polynomial {f} is not monic")
    if f.degree == 0:
        return [f]
    one = PrimeFieldPoly.one(f.p)
    divs = [one]
    for q, e in factor_poly(f).factors:
        powers = [one]
        for _ in range(e):
            powers.append(powers[-1] * q)
        divs = [d * qk for d in divs for qk in powers]
    return sorted(divs, key=PrimeFieldPoly.sort_key)


_TERM = re.compile(r"(?:(\d+)\*?)?(x)(?:\^(\d+))?|(\d+)")


def parse_poly(p: int, text: str, offset: int = 0) -> PrimeFieldPoly:
    """Parse ``c*x^k + ...`` terms; coefficients are reduced mod p."""
    check_characteristic(p)
    coeffs: dict[int, int] = {}
    pos = 0
    sign = 1
    expect_term = True
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if not expect_term:
            if ch not in "+-":
                raise ParseError(f"expected '+' or '-', found {ch!r}", offset + pos, text)
            sign = 1 if ch == "+" else -1
            expect_term = True
            pos += 1
            continue
        if ch == "-" and not coeffs and sign == 1:
            sign = -1
            pos += 1
            continue
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"expected polynomial term, found {ch!r}", offset + pos, text)
        if m.group(4) is not None:
            c, k = int(m.group(4)), 0
        else:
            c = int(m.group(1)) if m.group(1) else 1
            k = int(m.group(3)) if m.group(3) else 1
            if k > MAX_EXPONENT:
                raise ParseError(f"exponent {k} exceeds {MAX_EXPONENT}", offset + pos, text)
        coeffs[k] = coeffs.get(k, 0) + sign * c
        sign = 1
        expect_term = False
        pos = m.end()
    if expect_term:
        raise ParseError("expected polynomial term", offset + pos, text)
    top = max(coeffs)
    return PrimeFieldPoly.of(p, [coeffs.get(k, 0) for k in range(top + 1)])


def format_poly(f: PrimeFieldPoly) -> str:
    if f.is_zero():
        return "0"
    terms = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if not c:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            mono = "x" if k == 1 else f"x^{k}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms)
