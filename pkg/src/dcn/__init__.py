"""Exact curve-neighborhood combinatorics for the infinite dihedral group."""

from .dihedral import (
    COEFFICIENT_BOUND,
    CoefficientRangeError,
    Degree,
    Generator,
    GroupElement,
    IDENTITY,
    LemmaViolationError,
    ParseError,
    Word,
    ZERO_DEGREE,
    alternating_word,
    bruhat_le,
    bruhat_lt,
    canonical_key,
    degrees_up_to,
    embed,
    explicit_length,
    format_degree,
    format_element,
    format_element_set,
    format_word,
    inverse,
    is_left_descent,
    mul,
    parse_degree,
    parse_element,
    phi,
    r,
    reduced_word,
    sort_elements,
    sr,
    word_product,
)
from .moment_graph import (
    Chain,
    ChainStep,
    Root,
    chain_parity_witness,
    enumerate_chains,
    format_chain,
    graph_slice,
    has_increasing_chain,
    is_edge,
    reachable_set,
    root_of_reflection,
    root_reflection,
    roots_bounded,
    successors,
    to_dot,
)
from .neighborhood import (
    NeighborhoodResult,
    ad_set,
    curve_neighborhood,
    enumerate_up_to_length,
    maximal_elements,
    neighborhood_result,
    parity_witness,
)
from .oracle import (
    DiffReport,
    Mismatch,
    curve_neighborhood_oracle,
    differential_check,
    format_report,
)

__version__ = "0.1.0"

__all__ = [
    "COEFFICIENT_BOUND",
    "Chain",
    "ChainStep",
    "CoefficientRangeError",
    "Degree",
    "DiffReport",
    "Generator",
    "GroupElement",
    "IDENTITY",
    "LemmaViolationError",
    "Mismatch",
    "NeighborhoodResult",
    "ParseError",
    "Root",
    "Word",
    "ZERO_DEGREE",
    "ad_set",
    "alternating_word",
    "bruhat_le",
    "bruhat_lt",
    "canonical_key",
    "chain_parity_witness",
    "curve_neighborhood",
    "curve_neighborhood_oracle",
    "degrees_up_to",
    "differential_check",
    "embed",
    "enumerate_chains",
    "enumerate_up_to_length",
    "explicit_length",
    "format_chain",
    "format_degree",
    "format_element",
    "format_element_set",
    "format_report",
    "format_word",
    "graph_slice",
    "has_increasing_chain",
    "inverse",
    "is_edge",
    "is_left_descent",
    "maximal_elements",
    "mul",
    "neighborhood_result",
    "parity_witness",
    "parse_degree",
    "parse_element",
    "phi",
    "r",
    "reachable_set",
    "reduced_word",
    "root_of_reflection",
    "root_reflection",
    "roots_bounded",
    "sort_elements",
    "sr",
    "successors",
    "to_dot",
    "word_product",
]
