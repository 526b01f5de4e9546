"""Pattern-forcing and strongly pattern-forcing (0,1)-matrices.

A matrix A is Q-forcing when every submatrix of A with the pattern's shape
can be turned into Q by flipping 1s to 0s, and strongly Q-forcing when every
1-entry of A sits inside a submatrix equal to Q. The package computes the
associated extremal counts exactly: minimum ones for forcing via closed
formulas with a brute-force fallback, maximum ones for strong forcing via
certified descent search, plus the constructions that attain them.
"""

from .bitmatrix import (
    BitMatrix,
    MatrixFormatError,
    Position,
    direct_sum,
    entrywise_leq,
    hankel,
    identity,
    make,
    parse,
    serialize,
)
from .forcing import (
    CoreDecomposition,
    CornerReport,
    MinOnesResult,
    alt_dominates,
    core,
    corner_functions,
    dominates,
    is_forcing,
    min_ones,
    min_ones_boundary,
    min_ones_core,
    min_ones_general,
    minimal_forcing,
    minimal_forcing_from_corners,
    perm_max_extremal,
    perm_max_m,
    perm_min_bound,
    perm_min_equality,
)
from .oracle import (
    EnumerationCapError,
    oracle_is_strongly_forcing,
    oracle_max_strong,
    oracle_minimal_forcing,
)
from .patterns import (
    all_permutation_matrices,
    is_permutation_matrix,
    named,
    permutation_matrix,
    permutation_of,
)
from .strong_forcing import (
    ResultsCache,
    SearchConfig,
    SearchOutcome,
    WitnessEmbedding,
    apply_symmetry,
    canonical_form,
    conjectured_max_identity,
    dihedral_class,
    extremal_123_witness,
    extremal_132_witness,
    extremal_2x2,
    extremal_identity_witness,
    find_witness,
    is_strongly_forcing,
    linear_zero_construction,
    recurrence_lower_bound,
    search_max,
    thread_cap,
    upper_bound_3x3,
    upper_bound_simple,
)

__all__ = [
    "BitMatrix",
    "CoreDecomposition",
    "CornerReport",
    "EnumerationCapError",
    "MatrixFormatError",
    "MinOnesResult",
    "Position",
    "ResultsCache",
    "SearchConfig",
    "SearchOutcome",
    "WitnessEmbedding",
    "all_permutation_matrices",
    "alt_dominates",
    "apply_symmetry",
    "canonical_form",
    "conjectured_max_identity",
    "core",
    "corner_functions",
    "dihedral_class",
    "direct_sum",
    "dominates",
    "entrywise_leq",
    "extremal_123_witness",
    "extremal_132_witness",
    "extremal_2x2",
    "extremal_identity_witness",
    "find_witness",
    "hankel",
    "identity",
    "is_forcing",
    "is_permutation_matrix",
    "is_strongly_forcing",
    "linear_zero_construction",
    "make",
    "min_ones",
    "min_ones_boundary",
    "min_ones_core",
    "min_ones_general",
    "minimal_forcing",
    "minimal_forcing_from_corners",
    "named",
    "oracle_is_strongly_forcing",
    "oracle_max_strong",
    "oracle_minimal_forcing",
    "parse",
    "perm_max_extremal",
    "perm_max_m",
    "perm_min_bound",
    "perm_min_equality",
    "permutation_matrix",
    "permutation_of",
    "recurrence_lower_bound",
    "search_max",
    "serialize",
    "thread_cap",
    "upper_bound_3x3",
    "upper_bound_simple",
]

__version__ = "0.1.0"
