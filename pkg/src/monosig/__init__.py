"""Signature functions of x-monotone drawings of complete graphs.

Encode drawings as sign maps on vertex triples, validate them against the
forbidden configurations of the semisimple / simple / pseudolinear drawing
classes, compute k-edge and crossing statistics, synthesize explicit
polyline drawings, reduce signatures under switching equivalence, and
reproduce crossing-minimality results by exhaustive search.
"""

from .sigcore import (
    MINUS,
    PLUS,
    PreconditionError,
    SigFormatError,
    SignatureFunction,
    all_plus,
    emit_signature,
    negate,
    orient,
    parse_signature,
    quad_form,
    relabel,
    triple_rank,
    triples,
)
from .classify import (
    Verdict,
    check_pseudolinear,
    check_semisimple,
    check_simple,
    is_two_page,
)
from .stats import (
    EdgeStats,
    IdentityReport,
    convex_quad_count,
    k_edge_vector,
    side_count,
    verify_identities,
    zeta,
)
from .transform import (
    EquivClass,
    SwitchOp,
    applicable,
    apply_op,
    canonical,
    equivalence_class,
)
from .search import (
    SearchConfig,
    SearchResult,
    enumerate_valid,
    min_crossing_search,
    minimal_classes,
    verify_lele_bound,
    verify_lelele_conjecture,
)

__version__ = "0.1.0"

__all__ = [
    "MINUS",
    "PLUS",
    "PreconditionError",
    "SigFormatError",
    "SignatureFunction",
    "all_plus",
    "emit_signature",
    "negate",
    "orient",
    "parse_signature",
    "quad_form",
    "relabel",
    "triple_rank",
    "triples",
    "Verdict",
    "check_pseudolinear",
    "check_semisimple",
    "check_simple",
    "is_two_page",
    "EdgeStats",
    "IdentityReport",
    "convex_quad_count",
    "k_edge_vector",
    "side_count",
    "verify_identities",
    "zeta",
    "EquivClass",
    "SwitchOp",
    "applicable",
    "apply_op",
    "canonical",
    "equivalence_class",
    "SearchConfig",
    "SearchResult",
    "enumerate_valid",
    "min_crossing_search",
    "minimal_classes",
    "verify_lele_bound",
    "verify_lelele_conjecture",
]
