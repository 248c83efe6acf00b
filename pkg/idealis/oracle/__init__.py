from .brute import (
    EXTRA_CHECKS,
    PREDICATE_CHECKS,
    classify_by_oracle,
    find_irreducible_decomposition,
    idempotent_triple_condition_bf,
    irreducible_ideals_bf,
    is_2_absorbing_bf,
    is_2_absorbing_primary_bf,
    is_2_irreducible_bf,
    is_arithmetical_bf,
    is_irreducible_bf,
    is_n_primary_bf,
    is_primary_bf,
    is_prime_bf,
    is_radical_bf,
    is_singly_strongly_2_irreducible_bf,
    is_strongly_2_irreducible_bf,
    is_strongly_irreducible_bf,
    is_von_neumann_regular_bf,
    oracle_results,
    primary_ideals_bf,
    prime_ideals_bf,
    transfer_target,
    triple_cover_condition_bf,
)
from .elements import ELEMENT_PREDICATES, VALIDATION_MAX_ELEMENTS, element_level_results
from .lattice import LatticeTable, build_lattice, lattice_for
from .pool import WorkerPoolManager, get_pool_manager, shutdown_pool_manager
from .search import first_violation, search_tuples
from .witness import PredicateResult, Witness, verify_witness

__all__ = [
    "EXTRA_CHECKS",
    "PREDICATE_CHECKS",
    "classify_by_oracle",
    "find_irreducible_decomposition",
    "idempotent_triple_condition_bf",
    "irreducible_ideals_bf",
    "is_2_absorbing_bf",
    "is_2_absorbing_primary_bf",
    "is_2_irreducible_bf",
    "is_arithmetical_bf",
    "is_irreducible_bf",
    "is_n_primary_bf",
    "is_primary_bf",
    "is_prime_bf",
    "is_radical_bf",
    "is_singly_strongly_2_irreducible_bf",
    "is_strongly_2_irreducible_bf",
    "is_strongly_irreducible_bf",
    "is_von_neumann_regular_bf",
    "oracle_results",
    "primary_ideals_bf",
    "prime_ideals_bf",
    "transfer_target",
    "triple_cover_condition_bf",
    "ELEMENT_PREDICATES",
    "VALIDATION_MAX_ELEMENTS",
    "element_level_results",
    "LatticeTable",
    "build_lattice",
    "lattice_for",
    "WorkerPoolManager",
    "get_pool_manager",
    "shutdown_pool_manager",
    "first_violation",
    "search_tuples",
    "PredicateResult",
    "Witness",
    "verify_witness",
]
