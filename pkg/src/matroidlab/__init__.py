"""Exact tools for broken circuit complexes of matroids.

Build matroids (graphic, uniform, column, circuit-defined, parallel
connections), study their broken circuit complexes (f/h-vectors), derive
the distinguished linear system of parameters from signed fundamental
cocircuit rows, and decide by exact linear algebra whether a standard
ordering's candidate monomials form a basis of the quotient ring,
including parallel search over all standard orderings.
"""

from .complexes import (
    HVector, Ordering, bc_faces, bc_facets, broken_circuits, f_h_vectors,
    h_recursion_check, join_decomposition_check,
)
from .engine import (
    DecompositionReport, NbcReport, SearchReport, StandardOrdering, ThetaSystem,
    candidate_monomials, count_standard_orderings, decomposition_check,
    dj_values, iter_standard_orderings, lsop, nbc_check, order_ideals,
    search_orderings, standard_ordering, standard_ordering_at,
)
from .errors import MatroidlabError
from .families import (
    describe_named, list_named, named_matroid, phi_matroid, theta_matroid,
)
from .fields import GF2_FIELD, Q_FIELD, Field, field_from_name
from .incidence import (
    FundamentalMatrices, RankReport, basis_is_nonsingular, check_rank_identities,
    full_circuit_matrix, full_cocircuit_matrix, fundamental_matrices,
)
from .linalg import Matrix, RowSpace, tu_signing
from .matroids import (
    Matroid, from_circuits, from_graph, from_matrix, matroid_from_json,
    parallel_connection, represented_parallel_connection, uniform,
)
from .polynomials import (
    Ideal, Monomial, OrderIdealSet, Polynomial, groebner_basis,
    monomial_set_is_basis, quotient_dimension, quotient_dimension_macaulay,
    standard_monomials,
)
from .verify import CriterionResult, run_all, run_criterion

__version__ = "0.1.0"

__all__ = [
    "HVector", "Ordering", "bc_faces", "bc_facets", "broken_circuits",
    "f_h_vectors", "h_recursion_check", "join_decomposition_check",
    "DecompositionReport", "NbcReport", "SearchReport", "StandardOrdering",
    "ThetaSystem", "candidate_monomials", "count_standard_orderings",
    "decomposition_check", "dj_values", "iter_standard_orderings", "lsop",
    "nbc_check", "order_ideals", "search_orderings", "standard_ordering",
    "standard_ordering_at", "MatroidlabError", "describe_named", "list_named",
    "named_matroid", "phi_matroid", "theta_matroid", "GF2_FIELD", "Q_FIELD",
    "Field", "field_from_name", "FundamentalMatrices", "RankReport",
    "basis_is_nonsingular", "check_rank_identities", "full_circuit_matrix",
    "full_cocircuit_matrix", "fundamental_matrices", "Matrix", "RowSpace",
    "tu_signing", "Matroid", "from_circuits", "from_graph", "from_matrix",
    "matroid_from_json", "parallel_connection", "represented_parallel_connection",
    "uniform", "Ideal", "Monomial", "OrderIdealSet", "Polynomial",
    "groebner_basis", "monomial_set_is_basis", "quotient_dimension",
    "quotient_dimension_macaulay", "standard_monomials", "CriterionResult",
    "run_all", "run_criterion", "__version__",
]
