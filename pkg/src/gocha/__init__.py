"""Exact calculator for graded invariants of graph products of groups.

Cohomology Poincare series by the clique formula, gocha (graded dimension)
series, lower-central and restricted Lie-algebra ranks, identity verifiers,
and a brute-force quadratic-presentation oracle, all in exact arithmetic.
"""

from .errors import (
    ConventionMismatchError,
    GochaError,
    InvalidVertexError,
    LogDomainError,
    NotEulerianError,
    NotIntegralError,
    NotInvertibleError,
    NotPresentableError,
    ResourceCapError,
    SpecFileError,
    TruncationMismatchError,
    UsageError,
)
from .graph import Clique, Graph, cliques_by_size, enumerate_cliques, induced_subgraph
from .numtheory import (
    FactoredInteger,
    divisors,
    factorize,
    is_prime,
    moebius,
    p_valuation,
)
from .presentation import (
    GradedDimensions,
    KoszulityReport,
    QuadraticPresentation,
    graded_dimensions,
    koszulity_test,
    quadratic_dual,
)
from .product import (
    CyclicTwoVertex,
    FamilySpec,
    FreeVertex,
    PoincareVertex,
    PresentationVertex,
    SurfaceVertex,
    UNBOUNDED,
    VertexGroup,
    assemble_presentation,
    cohomological_dimension,
    dual_family,
    gocha_series,
    poincare_series,
    vertex_poincare,
)
from .ranks import (
    IdentityReport,
    RankTable,
    a_Fp_lazard,
    a_Fp_mobius,
    a_Fp_peel,
    a_Zp,
    b_from_gocha,
    table_from_gocha,
    verify_identities,
)
from .series import (
    DEFAULT_TRUNCATION,
    ExponentSequence,
    TruncatedSeries,
    binomial_factor,
    euler_product,
    jennings_product,
    peel_exponents,
    ps_exp,
    ps_inverse,
    ps_log,
    ps_mul,
)

__version__ = "0.1.0"

__all__ = [
    "ConventionMismatchError", "GochaError", "InvalidVertexError",
    "LogDomainError", "NotEulerianError", "NotIntegralError",
    "NotInvertibleError", "NotPresentableError", "ResourceCapError",
    "SpecFileError", "TruncationMismatchError", "UsageError",
    "Clique", "Graph", "cliques_by_size", "enumerate_cliques",
    "induced_subgraph",
    "FactoredInteger", "divisors", "factorize", "is_prime", "moebius",
    "p_valuation",
    "GradedDimensions", "KoszulityReport", "QuadraticPresentation",
    "graded_dimensions", "koszulity_test", "quadratic_dual",
    "CyclicTwoVertex", "FamilySpec", "FreeVertex", "PoincareVertex",
    "PresentationVertex", "SurfaceVertex", "UNBOUNDED", "VertexGroup",
    "assemble_presentation", "cohomological_dimension", "dual_family",
    "gocha_series", "poincare_series", "vertex_poincare",
    "IdentityReport", "RankTable", "a_Fp_lazard", "a_Fp_mobius", "a_Fp_peel",
    "a_Zp", "b_from_gocha", "table_from_gocha", "verify_identities",
    "DEFAULT_TRUNCATION", "ExponentSequence", "TruncatedSeries",
    "binomial_factor", "euler_product", "jennings_product", "peel_exponents",
    "ps_exp", "ps_inverse", "ps_log", "ps_mul",
    "__version__",
]
