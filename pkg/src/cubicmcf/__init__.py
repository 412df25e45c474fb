"""Exact arithmetic and multidimensional continued fractions in totally real
cubic orders: expansion engines with periodicity detection, catalogs of
additively indecomposable integers, (semi)convergent classification, bounded
searches for minimal norms and sums of squares."""

from .core import (
    AlgInt,
    CubicOrder,
    DecompositionNotFound,
    MissingUnits,
    NonIntegralTrace,
    NotAUnit,
    NotAssociated,
    NotDivisible,
    OrderError,
    ZeroDivisor,
    ZeroElement,
    char_poly,
    codifferent_trace,
    divide_exact,
    embed_sign,
    field_divide,
    is_associated,
    is_totally_positive,
    is_unit,
    mul,
    norm,
    signature,
    total_order_cmp,
    totally_leq,
    trace,
    unit_decompose,
)
from .families import (
    BoundViolated,
    NotGalois,
    ParameterOutOfRange,
    ab_family,
    ennola1,
    ennola2,
    express_conjugate,
    generic_order,
    parse_family,
    simplest_cubic,
    standard_vector,
    units_for_tracking,
)
from .indecomposables import (
    CatalogEntry,
    CodifferentCertificate,
    DecompositionWitness,
    DegenerateBasis,
    INDECOMPOSABLE,
    IndecomposableCatalog,
    NoCatalog,
    NoCertificate,
    SignatureMismatch,
    catalog,
    catalog_for,
    certify_by_codifferent,
    flat_associate,
    harvest_totally_positive,
    is_decomposable,
    label_str,
    min_nonassociated_norm,
    parallelepiped_candidates,
)
from .mcf import (
    BOUND_EXHAUSTED,
    ExpansionRecord,
    LatticeCoverResult,
    NegativeComponent,
    NotPeriodic,
    NotPeriodicWarning,
    PERIODIC,
    TERMINATED,
    ZeroPivot,
    brun_expand,
    classify_semiconvergents,
    generalized_semiconvergents,
    hasse_bernstein_unit,
    ijpa_expand,
    jpa_expand,
    lattice_cover_check,
    semiconvergents,
)
from .pythagoras import (
    MoreThanCap,
    NoRepresentation,
    NotTotallyPositive,
    SquareSet,
    min_squares,
    minimal_decomposition,
    pythagoras_lower_bound,
    squares_below,
    standard_target,
    verify_representation,
)

__all__ = [
    "AlgInt",
    "BOUND_EXHAUSTED",
    "BoundViolated",
    "CatalogEntry",
    "CodifferentCertificate",
    "CubicOrder",
    "DecompositionNotFound",
    "DecompositionWitness",
    "DegenerateBasis",
    "ExpansionRecord",
    "INDECOMPOSABLE",
    "IndecomposableCatalog",
    "LatticeCoverResult",
    "MissingUnits",
    "MoreThanCap",
    "NegativeComponent",
    "NoCatalog",
    "NoCertificate",
    "NoRepresentation",
    "NonIntegralTrace",
    "NotAUnit",
    "NotAssociated",
    "NotDivisible",
    "NotGalois",
    "NotPeriodic",
    "NotPeriodicWarning",
    "NotTotallyPositive",
    "OrderError",
    "PERIODIC",
    "ParameterOutOfRange",
    "SignatureMismatch",
    "SquareSet",
    "TERMINATED",
    "ZeroDivisor",
    "ZeroElement",
    "ZeroPivot",
    "ab_family",
    "brun_expand",
    "catalog",
    "catalog_for",
    "certify_by_codifferent",
    "flat_associate",
    "char_poly",
    "classify_semiconvergents",
    "codifferent_trace",
    "divide_exact",
    "embed_sign",
    "ennola1",
    "ennola2",
    "express_conjugate",
    "field_divide",
    "generalized_semiconvergents",
    "generic_order",
    "harvest_totally_positive",
    "hasse_bernstein_unit",
    "ijpa_expand",
    "is_associated",
    "is_decomposable",
    "is_totally_positive",
    "is_unit",
    "jpa_expand",
    "label_str",
    "lattice_cover_check",
    "min_nonassociated_norm",
    "min_squares",
    "minimal_decomposition",
    "mul",
    "norm",
    "parallelepiped_candidates",
    "parse_family",
    "pythagoras_lower_bound",
    "semiconvergents",
    "signature",
    "simplest_cubic",
    "squares_below",
    "standard_target",
    "standard_vector",
    "total_order_cmp",
    "totally_leq",
    "trace",
    "unit_decompose",
    "units_for_tracking",
    "verify_representation",
]
