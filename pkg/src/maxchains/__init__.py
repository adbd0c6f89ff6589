"""Posets with prescribed maximal-chain cardinalities: bounds, witnesses, search and certificates."""

from .bounds import BoundsReport, exact_bounds, lower_bound, sparse_condition, upper_bound
from .canon import canonical_form
from .constructions import (
    SumsDecomposition,
    as_shifted_sums,
    reconstruct_subset_sums,
    subset_sums,
    sums_construction,
    trivial_construction,
)
from .poset import (
    Poset,
    antichain,
    chain,
    format_poset,
    from_cover_edges,
    is_splitting_element,
    ordinal_sum,
    parse_poset,
    suborder,
    to_dot,
)
from .profile import (
    ChainProfile,
    adjacency_matrix,
    max_chain,
    maximal_chains,
    profile_enumerate,
    profile_matrix,
)
from .search import SearchResult, enumerate_posets, minimal_poset

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "ChainProfile",
    "Poset",
    "SearchResult",
    "SumsDecomposition",
    "adjacency_matrix",
    "antichain",
    "as_shifted_sums",
    "canonical_form",
    "chain",
    "enumerate_posets",
    "exact_bounds",
    "format_poset",
    "from_cover_edges",
    "is_splitting_element",
    "lower_bound",
    "max_chain",
    "maximal_chains",
    "minimal_poset",
    "ordinal_sum",
    "parse_poset",
    "profile_enumerate",
    "profile_matrix",
    "reconstruct_subset_sums",
    "sparse_condition",
    "suborder",
    "subset_sums",
    "sums_construction",
    "to_dot",
    "trivial_construction",
    "upper_bound",
]
