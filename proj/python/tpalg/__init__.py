"""Exact computations with structure constants over the rationals.

The heavy lifting happens in the compiled extension; this package just
re-exports its public surface.
"""

from tpalg._core import (
    AlgebraFile,
    AntisymmetryReport,
    AntisymmetryViolation,
    ClassifiedFamily,
    DerivationSpace,
    Grading,
    HomLieReport,
    JacobiReport,
    JacobiViolation,
    LieAlgebra,
    LinearMap,
    Product,
    Rational,
    SearchResult,
    TransposedPoissonReport,
    TripleViolation,
    Vector,
    __version__,
    build_catalog,
    build_schrodinger,
    check_antisymmetry,
    check_grading,
    check_hom_lie,
    check_jacobi,
    check_transposed_poisson,
    decompose_derivation_space,
    derivation_space,
    is_delta_derivation,
    left_multiplication,
    parse_algebra,
    parse_map,
    parse_product,
    schrodinger_dim,
    search_structures,
    serialize_algebra,
    serialize_map,
    serialize_product,
    standard_grading,
    unit_vector,
)

__all__ = [
    "AlgebraFile",
    "AntisymmetryReport",
    "AntisymmetryViolation",
    "ClassifiedFamily",
    "DerivationSpace",
    "Grading",
    "HomLieReport",
    "JacobiReport",
    "JacobiViolation",
    "LieAlgebra",
    "LinearMap",
    "Product",
    "Rational",
    "SearchResult",
    "TransposedPoissonReport",
    "TripleViolation",
    "Vector",
    "__version__",
    "build_catalog",
    "build_schrodinger",
    "check_antisymmetry",
    "check_grading",
    "check_hom_lie",
    "check_jacobi",
    "check_transposed_poisson",
    "decompose_derivation_space",
    "derivation_space",
    "is_delta_derivation",
    "left_multiplication",
    "parse_algebra",
    "parse_map",
    "parse_product",
    "schrodinger_dim",
    "search_structures",
    "serialize_algebra",
    "serialize_map",
    "serialize_product",
    "standard_grading",
    "unit_vector",
]
