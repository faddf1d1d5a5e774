"""Irreducible zero-sum multiset pairs over the integers.

A pair {A, B} of nonempty multisets of positive integers with equal sums
is irreducible when no proper nonempty submultisets of the two sides have
equal sums; equivalently, the corresponding zero-sum sequence has no
proper nonempty zero-sum subsequence.  This package decides
irreducibility, applies the derivation calculus that shortens pairs while
preserving irreducibility, and exhaustively surveys maximum pair lengths
under explicit caps.
"""

__version__ = "0.1.0"

from .core import (
    ContainsZeroError,
    EmptyError,
    KTooSmallError,
    LimitExceededError,
    Measures,
    Multiset,
    NonPositiveCountError,
    NonPositiveValueError,
    NotZeroSumError,
    Pair,
    UnbalancedError,
    ZeroSumSequence,
    extremal_construction,
    measures,
    multiset,
    normalize,
    pair_canonical,
    pair_to_sequence,
    sequence_to_pair,
)
from .derivation import (
    AllocationResult,
    BadSplitError,
    DerivationError,
    DerivationPlan,
    EmptyResultError,
    EqualValuesError,
    InfeasiblePlanError,
    NoSplitError,
    NoSuchElementError,
    TooSmallError,
    allocate_marbles,
    derive,
    derive_chain,
    derive_product,
    split_index,
)
from .enumeration import (
    BRUTE_MAX_K,
    PRUNED_MAX_K,
    EllReport,
    EnumConfig,
    ResourceLimitError,
    compute_ell,
    enumerate_irreducible,
    enumerate_multisets,
    extremal_pairs,
    verify_theorem_bounds,
)
from .formats import (
    FormatError,
    format_multiset,
    format_pair,
    pair_from_json,
    pair_to_json,
    parse_chain,
    parse_multiset,
    parse_pair,
    parse_plan,
)
from .irreducibility import (
    ReducibilityWitness,
    SumSet,
    TooLargeError,
    is_irreducible,
    is_irreducible_naive,
    proper_subset_sums,
    reducibility_witness,
)

__all__ = [
    "__version__",
    "Multiset",
    "Pair",
    "ZeroSumSequence",
    "Measures",
    "normalize",
    "multiset",
    "measures",
    "pair_canonical",
    "sequence_to_pair",
    "pair_to_sequence",
    "extremal_construction",
    "SumSet",
    "ReducibilityWitness",
    "proper_subset_sums",
    "is_irreducible",
    "is_irreducible_naive",
    "reducibility_witness",
    "DerivationPlan",
    "AllocationResult",
    "derive",
    "derive_product",
    "derive_chain",
    "split_index",
    "allocate_marbles",
    "EnumConfig",
    "EllReport",
    "enumerate_multisets",
    "enumerate_irreducible",
    "compute_ell",
    "extremal_pairs",
    "verify_theorem_bounds",
    "BRUTE_MAX_K",
    "PRUNED_MAX_K",
    "format_multiset",
    "format_pair",
    "parse_multiset",
    "parse_pair",
    "parse_plan",
    "parse_chain",
    "pair_to_json",
    "pair_from_json",
    "ContainsZeroError",
    "EmptyError",
    "KTooSmallError",
    "LimitExceededError",
    "NonPositiveCountError",
    "NonPositiveValueError",
    "NotZeroSumError",
    "UnbalancedError",
    "DerivationError",
    "NoSuchElementError",
    "EqualValuesError",
    "TooSmallError",
    "InfeasiblePlanError",
    "EmptyResultError",
    "NoSplitError",
    "BadSplitError",
    "ResourceLimitError",
    "TooLargeError",
    "FormatError",
]
