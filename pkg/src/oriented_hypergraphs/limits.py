"""Default enumeration budgets.

Every exhaustive search in the library takes an explicit cap (or vertex
bound) defaulting to one of these constants, so callers can tighten or
relax the guards without touching the algorithms. Exceeding a cap raises
ResourceLimitError before any large allocation happens.
"""

# Naive upper bound |V(H)|^|V(G)| * |E(H)|^|E(G)| * |I(H)|^|I(G)| on the
# homomorphism search space.
MAX_HOM_CANDIDATES = 1_000_000

# Number of subhypergraphs materialised by enumeration / power construction.
MAX_SUBHYPERGRAPHS = 100_000

# Vertex bounds for the factorial-flavoured enumerations.
MAX_CONTRIBUTOR_VERTICES = 9
MAX_MINOR_VERTICES = 8
MAX_ORACLE_VERTICES = 9
MAX_SACHS_VERTICES = 8
MAX_ARBORESCENCE_VERTICES = 8
