"""Base Check - foundation for executable theorem checks."""

import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Literal

from ..classify import DEFAULT_RULES, MUTATED_RULES, Classification, StructuralRules, classify
from ..config import get_settings
from ..core import Ideal, RingSpec, enumerate_ideals, format_ideal, format_ring, whole_ideal
from ..errors import IdealisError
from ..oracle import PredicateResult, Witness, oracle_results
from .families import SuiteConfig

logger = logging.getLogger(__name__)

Status = Literal["pass", "fail", "error"]


@dataclass(frozen=True)
class Counterexample:
    ring: str
    ideals: tuple[str, ...]
    detail: str
    witness: Witness | None = None
    witness_items: tuple[str, ...] = ()


@dataclass(frozen=True)
class CheckReport:
    theorem_id: str
    rings_tested: tuple[str, ...]
    cases: int
    status: Status
    counterexample: Counterexample | None = None
    message: str | None = None

    def __post_init__(self):
        if (self.status == "fail") != (self.counterexample is not None):
            raise ValueError("status is 'fail' exactly when a counterexample is present")
        if self.status != "error" and self.cases <= 0:
            raise ValueError("a pass or fail report needs at least one case")


class CheckContext:
    """Shared state of one suite run: settings plus oracle results memoized per ideal."""

    def __init__(self, config: SuiteConfig):
        self.config = config
        self.rules: StructuralRules = MUTATED_RULES if config.mutate else DEFAULT_RULES
        self._oracle: dict[Ideal, dict[str, PredicateResult]] = {}
        self._structural: dict[Ideal, Classification] = {}

    @property
    def threads(self) -> int | None:
        return self.config.threads

    @property
    def max_ideals(self) -> int | None:
        return self.config.max_ideals

    def proper_ideals(self, ring: RingSpec) -> list[Ideal]:
        whole = whole_ideal(ring)
        return [i for i in enumerate_ideals(ring, self._cap()) if i != whole]

    def _cap(self) -> int:
        return get_settings().max_ideals if self.max_ideals is None else self.max_ideals

    def oracle(self, i: Ideal) -> dict[str, PredicateResult]:
        if i not in self._oracle:
            self._oracle[i] = oracle_results(i.ring, i, self.threads, self.max_ideals)
        return self._oracle[i]

    def holds(self, i: Ideal, predicate: str) -> bool:
        return self.oracle(i)[predicate].holds

    def structural(self, i: Ideal) -> Classification:
        if i not in self._structural:
            self._structural[i] = classify(i.ring, i, self.rules, self.threads, self.max_ideals)
        return self._structural[i]


class CaseTally:
    """Counts cases and keeps the first counterexample."""

    def __init__(self, theorem_id: str):
        self.theorem_id = theorem_id
        self.cases = 0
        self.rings: list[str] = []
        self.counterexample: Counterexample | None = None

    def ring(self, ring: RingSpec) -> None:
        self.rings.append(format_ring(ring))

    def case(
        self,
        ok: bool,
        ring: RingSpec,
        ideals: tuple[Ideal, ...] = (),
        detail: str = "",
        witness: Witness | None = None,
    ) -> bool:
        self.cases += 1
        if not ok and self.counterexample is None:
            self.counterexample = Counterexample(
                ring=format_ring(ring),
                ideals=tuple(format_ideal(i) for i in ideals),
                detail=detail,
                witness=witness,
                witness_items=tuple(witness.describe(ring)) if witness else (),
            )
            logger.warning(f"[{self.theorem_id}] Counterexample in {format_ring(ring)}: {detail}")
        return ok

    def report(self) -> CheckReport:
        if self.cases == 0:
            return CheckReport(self.theorem_id, tuple(self.rings), 0, "error", message="no cases: vacuous check")
        status: Status = "fail" if self.counterexample else "pass"
        return CheckReport(self.theorem_id, tuple(self.rings), self.cases, status, self.counterexample)


class TheoremCheck(ABC):
    def __init__(self, check_id: str, description: str, statement: str):
        self.check_id = check_id
        self.description = description
        self.statement = statement

    @abstractmethod
    def run(self, ctx: CheckContext, tally: CaseTally) -> None:
        """Record every case of this check into tally."""


@dataclass
class CheckExecutor:
    ctx: CheckContext
    timings: dict[str, float] = field(default_factory=dict)

    def execute(self, check: TheoremCheck) -> CheckReport:
        logger.info(f"[{check.check_id}] Processing: {check.description}")
        tally = CaseTally(check.check_id)
        start = time.perf_counter()
        try:
            check.run(self.ctx, tally)
            report = tally.report()
            logger.info(f"[{check.check_id}] Completed: {report.status}, {report.cases} cases")
            return report
        except IdealisError as e:
            logger.error(f"[{check.check_id}] failed: {e}")
            return CheckReport(check.check_id, tuple(tally.rings), tally.cases, "error", message=str(e))
        finally:
            self.timings[check.check_id] = time.perf_counter() - start
