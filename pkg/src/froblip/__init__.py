"""Exact higher-dimensional Frobenius machinery for Lipschitz equivalence.

The package builds contraction-ratio systems into integer exponent data
over a pseudo-basis, computes exact multiplicity tables and directional
growth rates, enumerates threshold cut-sets, decides degree-bounded
matchability between cut-sets, and combines these into an equivalence
decider for dust-like self-similar sets.
"""
from .cones import (
    Cone,
    CoplanarFunctional,
    HalfSpaceCertificate,
    cone_combination,
    cone_equal,
    cone_member,
    coplanar_functional,
    half_space_certificate,
    v_plus_equal,
)
from .equivalence import (
    EQUIVALENT,
    NOT_EQUIVALENT,
    UNDECIDED,
    Verdict,
    decide,
    screen_invariants,
)
from .errors import (
    BasisMismatch,
    DimensionMismatch,
    DirectionOutsideCone,
    FroblipError,
    GcdNotOne,
    IncompatibleSymbolicBases,
    NoHalfSpace,
    NotCoplanar,
    ParseError,
    QueryOutOfRange,
    ResourceLimit,
    TargetOutsideHull,
    ThresholdTie,
)
from .frobenius import (
    DefiningData,
    GrowthEstimate,
    MultiplicityTable,
    build_multiplicity,
    estimate_gamma,
    frobenius_number_1d,
    make_defining_data,
    multiplicity_at,
)
from .growth import EntropySolution, analytic_gamma, max_entropy
from .lattice import (
    Monomial,
    PseudoBasis,
    factor_rationals,
    parse_rational,
    reduce_to_pseudo_basis,
    row_hnf,
)
from .selfsimilar import (
    ContractionSystem,
    CutSet,
    ExpThreshold,
    MatchReport,
    a_k_set,
    build_system,
    common_basis,
    cut_multiset,
    cut_set,
    hausdorff_dimension,
    iterate,
    matchable,
    matchable_search,
)

__version__ = "0.1.0"

__all__ = [
    "BasisMismatch",
    "Cone",
    "ContractionSystem",
    "CoplanarFunctional",
    "CutSet",
    "DefiningData",
    "DimensionMismatch",
    "DirectionOutsideCone",
    "EQUIVALENT",
    "EntropySolution",
    "ExpThreshold",
    "FroblipError",
    "GcdNotOne",
    "GrowthEstimate",
    "HalfSpaceCertificate",
    "IncompatibleSymbolicBases",
    "MatchReport",
    "Monomial",
    "MultiplicityTable",
    "NOT_EQUIVALENT",
    "NoHalfSpace",
    "NotCoplanar",
    "ParseError",
    "PseudoBasis",
    "QueryOutOfRange",
    "ResourceLimit",
    "TargetOutsideHull",
    "ThresholdTie",
    "UNDECIDED",
    "Verdict",
    "a_k_set",
    "analytic_gamma",
    "build_multiplicity",
    "build_system",
    "common_basis",
    "cone_combination",
    "cone_equal",
    "cone_member",
    "coplanar_functional",
    "cut_multiset",
    "cut_set",
    "decide",
    "estimate_gamma",
    "factor_rationals",
    "frobenius_number_1d",
    "half_space_certificate",
    "hausdorff_dimension",
    "iterate",
    "make_defining_data",
    "matchable",
    "matchable_search",
    "max_entropy",
    "multiplicity_at",
    "parse_rational",
    "reduce_to_pseudo_basis",
    "row_hnf",
    "screen_invariants",
    "v_plus_equal",
]
