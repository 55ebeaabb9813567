"""Exact-arithmetic toolkit for eccentricity-matrix spectra of graphs.

Builds the largest-distance (eccentricity) matrix of a connected graph,
computes eigenvalue multiplicities and characteristic polynomials over the
integers without floating-point error, and mechanically checks the
large-multiplicity characterization of the eigenvalue -1 by structured family
checks and isomorph-free enumeration at small orders.
"""

__version__ = "0.1.0"

from .graphs import (
    Graph,
    Metrics,
    FamilyId,
    bfs_metrics,
    build_family,
    bull,
    complete,
    complete_multipartite,
    cycle,
    disjoint_union,
    duplicate_classes,
    empty_graph,
    graph6_decode,
    graph6_encode,
    is_connected,
    join,
    join_clique_with,
    mixed_extension_star,
    path,
)
from .exactalg import (
    Inertia,
    IntMatrix,
    IntPolynomial,
    bareiss_rank,
    berkowitz_charpoly,
    eigenvalue_bracket,
    inertia_at,
    lagrange_interpolate,
    poly_divide_exact,
    root_multiplicity,
)
from .eccentricity import (
    EccMatrix,
    acharpoly,
    ecc_matrix,
    hl_index,
    is_irreducible,
    median_eigenvalue_is,
    multiplicity,
    twin_eigenvalue_predictions,
)
from .quotient import (
    BlockSpec,
    QuotientResult,
    detect_join_blockspec,
    quotient,
    realize,
    verify_spectrum_identity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
