"""Cohen-Macaulay classification of simplicial complexes by two
independent routes: Reisner link homology and Alexander-dual componentwise
linearity, with an exhaustive cross-checking harness."""

from .complexes import (
    NEG_INF,
    SimplicialComplex,
    full_simplex,
    irrelevant_complex,
    normalize,
    void_complex,
)
from .criteria import (
    BettiTable,
    ClassReport,
    RouteDisagreement,
    Verdict,
    classify,
    graded_betti_hochster,
    has_linear_resolution_er,
    is_acm_route_a,
    is_acm_route_b,
    is_cohen_macaulay,
    is_componentwise_linear,
    is_scm_dual,
    is_scm_skeleton,
)
from .harness import (
    ALL_CHECKS,
    HarnessConfig,
    HarnessReport,
    enumerate_complexes,
    random_complex,
    run,
)
from .homology import (
    BoundaryMatrix,
    FieldSpec,
    boundary_matrix,
    rank,
    reduced_betti,
    snf_diagonal,
)
from .ideals import (
    SquarefreeIdeal,
    alexander_dual,
    complex_of_ideal,
    generation_degrees,
    ideal_of_complex,
    squarefree_component,
)

__all__ = [
    "ALL_CHECKS",
    "BettiTable",
    "BoundaryMatrix",
    "ClassReport",
    "FieldSpec",
    "HarnessConfig",
    "HarnessReport",
    "NEG_INF",
    "RouteDisagreement",
    "SimplicialComplex",
    "SquarefreeIdeal",
    "Verdict",
    "alexander_dual",
    "boundary_matrix",
    "classify",
    "complex_of_ideal",
    "enumerate_complexes",
    "full_simplex",
    "generation_degrees",
    "graded_betti_hochster",
    "has_linear_resolution_er",
    "ideal_of_complex",
    "irrelevant_complex",
    "is_acm_route_a",
    "is_acm_route_b",
    "is_cohen_macaulay",
    "is_componentwise_linear",
    "is_scm_dual",
    "is_scm_skeleton",
    "normalize",
    "random_complex",
    "rank",
    "reduced_betti",
    "run",
    "snf_diagonal",
    "squarefree_component",
    "void_complex",
]
