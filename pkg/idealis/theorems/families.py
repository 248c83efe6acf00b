"""Ring families the theorem checks iterate over."""

from dataclasses import dataclass

from ..arith import monic_polys
from ..core import IntegersMod, PolyQuotient, RingSpec, parse_ring
from ..errors import EmptyFamilyError

DEFAULT_PRODUCTS = (
    "Z/4 x Z/9",
    "Z/8 x Z/3",
    "Z/2 x Z/3 x Z/5",
    "GF(2)[x]/(x^2) x Z/9",
)


@dataclass(frozen=True)
class SuiteConfig:
    max_n: int = 120
    extra_n: tuple[int, ...] = (210, 360)
    gf2_max_deg: int = 5
    gf3_max_deg: int = 3
    products: tuple[str, ...] = DEFAULT_PRODUCTS
    pid_bound: int = 200
    ufd_bound: int = 1000
    ufd_transfer_bound: int = 200
    lcm_bound: int = 200
    comaximal_bound: int = 200
    triple_cover_max_n: int = 60
    validation_max_elements: int = 64
    threads: int | None = None
    max_ideals: int | None = None
    mutate: bool = False
    # explicit ring texts; when given they replace every generated family
    rings: tuple[str, ...] = ()


def integers_mod_family(max_n: int, extra: tuple[int, ...] = (), min_n: int = 2) -> list[RingSpec]:
    ns = list(range(min_n, max_n + 1)) + [n for n in extra if n > max_n]
    return [IntegersMod(n) for n in ns]


def poly_quotient_family(p: int, max_deg: int) -> list[RingSpec]:
    return [PolyQuotient(p, f) for d in range(1, max_deg + 1) for f in monic_polys(p, d)]


def explicit_family(texts) -> list[RingSpec]:
    return [parse_ring(t) for t in texts]


def matrix_rings(config: SuiteConfig) -> list[RingSpec]:
    """The full test matrix: Z/n, GF(2) and GF(3) quotients, then the products."""
    if config.rings:
        return explicit_family(config.rings)
    rings = (
        integers_mod_family(config.max_n, config.extra_n)
        + poly_quotient_family(2, config.gf2_max_deg)
        + poly_quotient_family(3, config.gf3_max_deg)
        + explicit_family(config.products)
    )
    if not rings:
        raise EmptyFamilyError("the configured ring families are all empty")
    return rings


def require_nonempty(rings: list, name: str) -> list:
    if not rings:
        raise EmptyFamilyError(f"family {name!r} is empty")
    return rings
