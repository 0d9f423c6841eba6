"""Exact orthogonal-polynomial, Jacobi-matrix and Darboux-transform toolkit."""
from .cfrac import (
    ContinuedFraction,
    FractionKind,
    RationalApproximant,
    approximant,
    even_contraction,
    jfraction,
    laurent_coefficients,
    laurent_match,
    pfraction,
    sfraction,
)
from .darboux import (
    DarbouxResult,
    ImaginaryShift,
    LUFactors,
    NoShift,
    RealShift,
    chihara,
    extended_darboux,
    lu,
    recurrence_polys,
    ul,
)
from .errors import *  # noqa: F401,F403
from .exact import ComplexRational, Polynomial, Scalar, parse_rational, rational_sqrt
from .jacobi import (
    GeneralizedJacobi,
    MonicJacobi,
    char_poly,
    definitizable_check,
    generalized_from,
    gram,
    indefinite_inner,
    jacobi_from_moments,
    truncate,
)
from .linalg import Matrix, det
from .moments import (
    Classification,
    Discrete,
    Functional,
    Kind,
    MomentSequence,
    NamedLaguerre,
    RawMoments,
    chihara_measure,
    classify,
    hankel_det,
    hankel_matrix,
    measure_moments,
    unwrap_measure,
    unwrap_moments,
)
from .opoly import (
    OrthoSequence,
    kernel_polys,
    linearized_polys,
    ortho_poly_determinant,
    ortho_polys,
    squared_family,
)
from .verify import CheckResult, VerificationReport, verify_all

__version__ = "0.1.0"
