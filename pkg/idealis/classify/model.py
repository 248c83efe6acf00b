"""Classification results shared by the structural and oracle engines."""

from dataclasses import dataclass, field, fields

PREDICATES = (
    "prime",
    "primary",
    "radical",
    "irreducible",
    "strongly_irreducible",
    "two_irreducible",
    "strongly_two_irreducible",
    "singly_strongly_two_irreducible",
    "two_absorbing",
    "two_absorbing_primary",
)

# Kebab-case names accepted on the command line.
PREDICATE_ALIASES = {
    "prime": "prime",
    "primary": "primary",
    "radical": "radical",
    "irreducible": "irreducible",
    "strongly-irreducible": "strongly_irreducible",
    "2-irreducible": "two_irreducible",
    "strongly-2-irreducible": "strongly_two_irreducible",
    "singly-strongly-2-irreducible": "singly_strongly_two_irreducible",
    "2-absorbing": "two_absorbing",
    "2-absorbing-primary": "two_absorbing_primary",
}

IMPLICATIONS = (
    ("prime", "primary"),
    ("primary", "two_absorbing_primary"),
    ("strongly_irreducible", "irreducible"),
    ("irreducible", "two_irreducible"),
    ("strongly_irreducible", "strongly_two_irreducible"),
    ("strongly_two_irreducible", "two_irreducible"),
    ("strongly_two_irreducible", "singly_strongly_two_irreducible"),
    ("two_absorbing", "two_absorbing_primary"),
)

ORACLE = "oracle"
TRANSFER_ORACLE = "transfer-oracle"


def structural(rule: str) -> str:
    return f"structural:{rule}"


def alias_of(name: str) -> str:
    """Kebab-case alias of a Classification field."""
    for alias, target in PREDICATE_ALIASES.items():
        if target == name:
            return alias
    raise KeyError(name)


@dataclass(frozen=True)
class ShapeSummary:
    distinct_prime_count: int
    exponents: tuple[int, ...]
    squarefree: bool

    @classmethod
    def from_exponents(cls, exponents) -> "ShapeSummary":
        exponents = tuple(exponents)
        return cls(len(exponents), exponents, all(e == 1 for e in exponents))


@dataclass(frozen=True)
class Classification:
    prime: bool
    primary: bool
    radical: bool
    irreducible: bool
    strongly_irreducible: bool
    two_irreducible: bool
    strongly_two_irreducible: bool
    singly_strongly_two_irreducible: bool
    two_absorbing: bool
    two_absorbing_primary: bool
    # predicate name -> "structural:<rule>" | "oracle" | "transfer-oracle"
    provenance: dict[str, str] = field(default_factory=dict, compare=False, hash=False)

    @classmethod
    def from_verdicts(cls, verdicts: dict[str, bool], provenance: dict[str, str]) -> "Classification":
        missing = [p for p in PREDICATES if p not in verdicts or p not in provenance]
        if missing:
            raise ValueError(f"classification is missing predicates: {missing}")
        return cls(**{p: bool(verdicts[p]) for p in PREDICATES}, provenance=dict(provenance))

    @classmethod
    def uniform(cls, value: bool, source: str) -> "Classification":
        return cls(**{p: value for p in PREDICATES}, provenance={p: source for p in PREDICATES})

    def verdicts(self) -> dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name != "provenance"}

    def differences(self, other: "Classification") -> list[str]:
        return [p for p in PREDICATES if getattr(self, p) != getattr(other, p)]


def implication_violations(c: Classification) -> list[str]:
    return [f"{a} => {b}" for a, b in IMPLICATIONS if getattr(c, a) and not getattr(c, b)]
