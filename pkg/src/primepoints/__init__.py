"""Exact invariants (determinant, permanent, pfaffian, hafnian), congruence
obstructions for prime points, and constructive prime searches on six
families of integer varieties."""
from .congruence import (
    ObstructionReport,
    ReachabilitySet,
    epsilon_for_family,
    epsilon_of_y,
    obstruction_admits_primes,
    odd_residue_reachability,
    phi2,
)
from .construct import (
    TwoCoprimeSpec,
    bezout_avoiding_prime,
    intertwined_prime_points,
    is_two_coprime,
    nu_for_prime,
    two_coprime_tuples,
    validate_two_coprime_tuple,
)
from .errors import (
    BudgetError,
    DomainError,
    HypothesisViolationError,
    IncompatibleSystemError,
    InvalidArgumentError,
    NoPrimesGuaranteedError,
    ResourceLimitError,
    UndefinedEpsilonError,
    UnsupportedInputError,
)
from .intertwined import (
    IntertwinedWitness,
    SparsePoly,
    b_pair_witness,
    det_pair_witness,
    haf_pair_witness,
    perm_pair_witness,
    pf_pair_witness,
    poly_eval,
    scale_pair_witness,
    symbolic_invariant,
    validate_witness,
)
from .invariants import (
    Decomposition,
    IntMatrix,
    VarietyFamily,
    VarietyPoint,
    big_p,
    decompose,
    delta_eval,
    det,
    det_family,
    haf_family,
    hf,
    perm,
    perm_family,
    pf,
    pf_family,
    quad_family,
    quad_form,
    rect_family,
)
from .primes import Progression, crt, extended_gcd, is_prime, primes_in_system, primes_up_to
from .search import PrimePointReport, SearchConfig, find_prime_points, verify_point
from .vaughan import (
    ConditionReport,
    GrowthPoint,
    LinearEquation,
    PrimeCountReport,
    check_conditions,
    count_prime_solutions,
    enumerate_prime_solutions,
    growth_report,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "ConditionReport",
    "Decomposition",
    "DomainError",
    "GrowthPoint",
    "HypothesisViolationError",
    "IncompatibleSystemError",
    "IntMatrix",
    "IntertwinedWitness",
    "InvalidArgumentError",
    "LinearEquation",
    "NoPrimesGuaranteedError",
    "ObstructionReport",
    "PrimeCountReport",
    "PrimePointReport",
    "Progression",
    "ReachabilitySet",
    "ResourceLimitError",
    "SearchConfig",
    "SparsePoly",
    "TwoCoprimeSpec",
    "UndefinedEpsilonError",
    "UnsupportedInputError",
    "VarietyFamily",
    "VarietyPoint",
    "b_pair_witness",
    "bezout_avoiding_prime",
    "big_p",
    "check_conditions",
    "count_prime_solutions",
    "crt",
    "decompose",
    "delta_eval",
    "det",
    "det_family",
    "det_pair_witness",
    "enumerate_prime_solutions",
    "epsilon_for_family",
    "epsilon_of_y",
    "extended_gcd",
    "find_prime_points",
    "growth_report",
    "haf_family",
    "haf_pair_witness",
    "hf",
    "intertwined_prime_points",
    "is_prime",
    "is_two_coprime",
    "nu_for_prime",
    "obstruction_admits_primes",
    "odd_residue_reachability",
    "perm",
    "perm_family",
    "perm_pair_witness",
    "pf",
    "pf_family",
    "pf_pair_witness",
    "phi2",
    "poly_eval",
    "primes_in_system",
    "primes_up_to",
    "quad_family",
    "quad_form",
    "rect_family",
    "scale_pair_witness",
    "symbolic_invariant",
    "two_coprime_tuples",
    "validate_two_coprime_tuple",
    "validate_witness",
    "verify_point",
]
