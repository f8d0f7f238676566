"""Exact Poisson-bracket calculus and Poisson spectra on Q[x, y, z]."""

from .factor import Factorization, FactorPart, factor_bounded
from .groebner import (
    GroebnerBasis,
    RationalPoints,
    TermOrder,
    buchberger,
    certify,
    dimension,
    ideal_member,
    is_unit_ideal,
    normal_form,
    rational_points,
)
from .lifting import (
    CmCertificate,
    LiftResult,
    PointSearchError,
    TruncatedSeries,
    cm_certificate,
    lift_at_origin,
    truncate,
    verify_certificate,
    verify_lift,
)
from .parser import ParseError, parse, render
from .poly import (
    Poly,
    SquareFreePart,
    divides,
    exact_quotient,
    gcd,
    gcd_many,
    squarefree_decomposition,
)
from .spectrum import (
    HeightOnePrime,
    NotCoprimeError,
    PencilParameter,
    PointClass,
    PointKind,
    PoissonCore,
    ReportFlags,
    ResiduallyNullStratum,
    SpectrumReport,
    classify_point,
    height_one_primes,
    is_poisson_simple_quotient,
    pencil_member,
    poisson_core_of_point,
    poisson_maximal_locus,
    residually_null_ideal,
    spectrum_report,
)
from .triples import (
    NotPoissonError,
    PoissonTriple,
    PolyVec,
    bracket,
    compatible,
    compatible_m_exact,
    cross,
    curl,
    cycle_variables,
    dot,
    exact_triple,
    generates_poisson_ideal,
    grad,
    hamiltonian,
    is_poisson_central,
    is_poisson_triple,
    jacobi_witness,
    jacobian_det,
    jacobiator,
    m_exact_triple,
    qm_exact_triple,
    verify_triple,
)

__version__ = "0.1.0"

__all__ = [
    "CmCertificate",
    "Factorization",
    "FactorPart",
    "GroebnerBasis",
    "HeightOnePrime",
    "LiftResult",
    "NotCoprimeError",
    "NotPoissonError",
    "ParseError",
    "PencilParameter",
    "PointClass",
    "PointKind",
    "PointSearchError",
    "PoissonCore",
    "PoissonTriple",
    "Poly",
    "PolyVec",
    "RationalPoints",
    "ReportFlags",
    "ResiduallyNullStratum",
    "SpectrumReport",
    "SquareFreePart",
    "TermOrder",
    "TruncatedSeries",
    "bracket",
    "buchberger",
    "certify",
    "classify_point",
    "cm_certificate",
    "compatible",
    "compatible_m_exact",
    "cross",
    "curl",
    "cycle_variables",
    "dimension",
    "divides",
    "dot",
    "exact_quotient",
    "exact_triple",
    "factor_bounded",
    "gcd",
    "gcd_many",
    "generates_poisson_ideal",
    "grad",
    "hamiltonian",
    "height_one_primes",
    "ideal_member",
    "is_poisson_central",
    "is_poisson_simple_quotient",
    "is_poisson_triple",
    "is_unit_ideal",
    "jacobi_witness",
    "jacobian_det",
    "jacobiator",
    "lift_at_origin",
    "m_exact_triple",
    "normal_form",
    "parse",
    "pencil_member",
    "poisson_core_of_point",
    "poisson_maximal_locus",
    "qm_exact_triple",
    "rational_points",
    "render",
    "residually_null_ideal",
    "spectrum_report",
    "squarefree_decomposition",
    "truncate",
    "verify_certificate",
    "verify_lift",
    "verify_triple",
    "__version__",
]
