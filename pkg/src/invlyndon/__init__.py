"""Lyndon and inverse Lyndon factorizations, and conversions between CFL_in and ICFL."""

from .word_core import (
    Alphabet,
    InputError,
    InternalError,
    InvariantError,
    Order,
    Outcome,
    Word,
    as_word,
    border_array,
    compare,
    is_inverse_lyndon,
    is_lyndon,
    shortest_non_inverse_lyndon_prefix,
    unbordered_border,
)
from .factorize import (
    CanonicalPair,
    Factorization,
    Kind,
    canonical_pair,
    cfl,
    cfl_in,
    expand_runs,
    icfl,
    run_view,
)
from .convert import (
    ChainDecomposition,
    cfl_in_from_icfl,
    icfl_from_cfl_in,
    icfl_of_chain,
    is_grouping,
    nb,
    pmc_decompose,
)

__version__ = "0.1.0"
