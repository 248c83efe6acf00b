"""Engine selection: structural rules, brute-force oracle, or both cross-checked."""

import logging
from typing import Literal

from ..core import Ideal, RingSpec, format_ideal, format_ring
from ..errors import EngineDisagreementError
from ..oracle import brute
from .model import Classification
from .structural import DEFAULT_RULES, StructuralRules, classify

logger = logging.getLogger(__name__)

Engine = Literal["structural", "oracle", "both"]
ENGINES = ("structural", "oracle", "both")


def classify_with_engine(
    ring: RingSpec,
    i: Ideal,
    engine: Engine = "structural",
    rules: StructuralRules = DEFAULT_RULES,
    threads: int | None = None,
    max_ideals: int | None = None,
) -> Classification:
    if engine == "structural":
        return classify(ring, i, rules, threads, max_ideals)
    if engine == "oracle":
        return brute.classify_by_oracle(ring, i, threads, max_ideals)
    if engine != "both":
        raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES}")

    structural_result = classify(ring, i, rules, threads, max_ideals)
    oracle_result = brute.classify_by_oracle(ring, i, threads, max_ideals)
    diff = structural_result.differences(oracle_result)
    if diff:
        logger.error(f"Engines disagree on {format_ideal(i)} in {format_ring(ring)}: {diff}")
        raise EngineDisagreementError(
            f"structural and oracle engines disagree on {format_ideal(i)} in {format_ring(ring)}: "
            + ", ".join(diff)
        )
    logger.info(f"Engines agree on {format_ideal(i)} in {format_ring(ring)}")
    return structural_result
