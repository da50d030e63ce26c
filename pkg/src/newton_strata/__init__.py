"""Newton strata of Iwahori double cosets for GL_n.

Exact combinatorics of the extended affine Weyl group (lengths, normal
forms), the quantum Bruhat graph, the Newton poset of sigma-conjugacy
classes, generic Newton points and virtual dimensions of strata, a search
for non-equidimensional configurations, and an independent Monte-Carlo
matrix oracle over F_p((t)).
"""

__version__ = "0.1.0"

from .weyl import (
    CartanData,
    DiagramAutomorphism,
    RankMismatch,
    WeylElement,
    cartan_type_a,
    has_full_sigma_support,
    parse_word,
    sigma_support,
)
from .affine import (
    AffineElement,
    NonDominantTranslation,
    affine_simple_reflection,
    eta,
    format_normal,
    format_raw,
    is_superregular,
    mult_simple,
    parse_normal,
    parse_raw,
)
from .qbg import QbgEdge, QuantumBruhatGraph, qbg_for_rank
from .newton import (
    DEFAULT_GAP_LIMIT,
    IsoClass,
    LimitExceeded,
    MalformedSlopes,
    NewtonPoint,
    NotComparable,
    basic_class,
    chain_length,
    defect,
    dominance_leq,
    dominance_lt,
    dominance_max,
    hasse_covers,
    interval,
    maximal_chains,
    rho_pairing,
)
from .strata import (
    AnalysisReport,
    ClassRecord,
    IncomparableTops,
    KappaMismatch,
    TripleConditionReport,
    NotSuperregular,
    TripleCandidate,
    TwistedUnsupported,
    analyze,
    check_triple_conditions,
    generic_newton_point,
    is_cordial,
    load_fixture,
    search_triples,
    virtual_dimension,
)
from .isocrystal import (
    LaurentPolyMatrix,
    PrecisionLoss,
    SampleReport,
    SamplerConfig,
    estimate_generic_newton,
    matrix_of,
    newton_point_of_matrix,
    required_deg_cap,
    sample_iwahori,
)

__all__ = [
    "__version__",
    # weyl
    "CartanData", "DiagramAutomorphism", "RankMismatch", "WeylElement",
    "cartan_type_a", "has_full_sigma_support", "parse_word", "sigma_support",
    # affine
    "AffineElement", "NonDominantTranslation", "affine_simple_reflection",
    "eta", "format_normal", "format_raw", "is_superregular", "mult_simple",
    "parse_normal", "parse_raw",
    # qbg
    "QbgEdge", "QuantumBruhatGraph", "qbg_for_rank",
    # newton
    "DEFAULT_GAP_LIMIT", "IsoClass", "LimitExceeded", "MalformedSlopes",
    "NewtonPoint", "NotComparable", "basic_class", "chain_length", "defect",
    "dominance_leq", "dominance_lt", "dominance_max", "hasse_covers",
    "interval", "maximal_chains", "rho_pairing",
    # strata
    "AnalysisReport", "ClassRecord", "IncomparableTops", "KappaMismatch",
    "TripleConditionReport", "NotSuperregular", "TripleCandidate",
    "TwistedUnsupported", "analyze", "check_triple_conditions",
    "generic_newton_point", "is_cordial", "load_fixture", "search_triples",
    "virtual_dimension",
    # isocrystal
    "LaurentPolyMatrix", "PrecisionLoss", "SampleReport", "SamplerConfig",
    "estimate_generic_newton", "matrix_of", "newton_point_of_matrix",
    "required_deg_cap", "sample_iwahori",
]
