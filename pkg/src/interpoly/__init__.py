"""Exact-arithmetic toolkit for the interpolation problem.

Fit algebraic curves and hypersurfaces through point sets over prime
fields or the rationals by exact kernel computation, run the
Lagrange-based single-error detection/correction protocol, evaluate the
Brill-Noether counting formulas with their exceptional classes, and
verify the classical point counts empirically with a seeded harness.
"""

from .brillnoether import (
    BNReport,
    CurveClass,
    NO_EXCEPTION,
    NORMAL_BUNDLE_EXCEPTIONS,
    NOT_APPLICABLE,
    POINT_EXCEPTIONS,
    YES,
    bn_dimension,
    bn_table,
    bn_table_csv,
    expected_points,
    genus_moduli_dimension,
    hypersurface_count,
    interpolation_verdict,
    max_plane_genus,
    normal_bundle_verdict,
    plane_interpolation_count,
    rho,
    section_space_dim,
)
from .errors import (
    AmbiguousDecodeError,
    DetectedError,
    DimensionMismatchError,
    DuplicateNodeError,
    FieldTooSmallError,
    InsufficientRedundancyError,
    InvalidGenusError,
    MixedFieldsError,
)
from .fields import (
    DEFAULT_SEED,
    FpElement,
    PrimeField,
    QQ,
    RationalField,
    SeededRng,
    is_prime,
)
from .fitting import (
    BasisSpec,
    FitResult,
    PointSet,
    design_matrix,
    expected_interpolation_count,
    fit_curves,
    lagrange_fit,
)
from .harness import (
    DEFAULT_PRIME,
    SuiteConfig,
    SuiteReport,
    check_uniqueness,
    run_suite,
    suite_basis,
)
from .linalg import LinearSolution, Matrix, kernel, rref, solve
from .polynomials import Polynomial, grlex_key, monomial_basis
from .reedsolomon import (
    Codeword,
    Message,
    rs_corrupt,
    rs_decode,
    rs_detect,
    rs_encode,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousDecodeError",
    "BNReport",
    "BasisSpec",
    "Codeword",
    "CurveClass",
    "DEFAULT_PRIME",
    "DEFAULT_SEED",
    "DetectedError",
    "DimensionMismatchError",
    "DuplicateNodeError",
    "FieldTooSmallError",
    "FitResult",
    "FpElement",
    "InsufficientRedundancyError",
    "InvalidGenusError",
    "LinearSolution",
    "Matrix",
    "Message",
    "MixedFieldsError",
    "NORMAL_BUNDLE_EXCEPTIONS",
    "NOT_APPLICABLE",
    "NO_EXCEPTION",
    "POINT_EXCEPTIONS",
    "PointSet",
    "Polynomial",
    "PrimeField",
    "QQ",
    "RationalField",
    "SeededRng",
    "SuiteConfig",
    "SuiteReport",
    "YES",
    "bn_dimension",
    "bn_table",
    "bn_table_csv",
    "check_uniqueness",
    "design_matrix",
    "expected_interpolation_count",
    "expected_points",
    "fit_curves",
    "genus_moduli_dimension",
    "grlex_key",
    "hypersurface_count",
    "interpolation_verdict",
    "is_prime",
    "kernel",
    "lagrange_fit",
    "max_plane_genus",
    "monomial_basis",
    "normal_bundle_verdict",
    "plane_interpolation_count",
    "rho",
    "rref",
    "rs_corrupt",
    "rs_decode",
    "rs_detect",
    "rs_encode",
    "run_suite",
    "section_space_dim",
    "solve",
    "suite_basis",
]
