"""Exact rational linear algebra for spaces of matrices with a bounded
number of distinct eigenvalues.

The package provides exact kernels (rank, determinant, characteristic
polynomial, resultants), spectral predicates computed without root finding,
constructors for the extremal matrix spaces and their dimension
combinatorics, subspace arithmetic with Borel-invariance tests,
one-parameter-subgroup degenerations with weight decompositions, and a
verification harness with a CLI front end.
"""

from __future__ import annotations

from fractions import Fraction as Rational

from .degeneration import (
    BorderProfile,
    LaurentVec,
    TFamily,
    WeightComponent,
    border_profile,
    component_dims,
    corner_weights,
    grassmannian_limit,
    one_param_family,
    weight_decomposition,
)
from .errors import (
    BadBudgetError,
    BothZeroError,
    DegenerateFamilyError,
    DegenerateLambdasError,
    DegreeTooLowError,
    DuplicateAbscissaError,
    DuplicateLambdaError,
    EigenboundError,
    EmptyAmbientError,
    InfeasibleConfigError,
    InsufficientSamplesError,
    NonSquareError,
    NotBorelInvariantError,
    NotPhiStableError,
    NotStrictlyUpperError,
    PreconditionFailedError,
    RankDeficientError,
    SingularMatrixError,
    SizeMismatchError,
)
from .harness import (
    CheckResult,
    VerificationReport,
    maximality_probe,
    run_full_suite,
    verify_extremal,
)
from .identities import (
    BorderedInstance,
    CoefficientComparison,
    DiscriminantInstance,
    ResultantCoefficientReport,
    bordered_matrix,
    closed_form_char_poly,
    perturbation_sums,
    quartic_discriminant_check,
    two_zeros_resultant_check,
    verify_two_zeros_root_structure,
)
from .matrices import Matrix, det, inverse, rank
from .polynomials import (
    Poly,
    char_poly,
    interpolate,
    poly_gcd,
    resultant,
    sylvester_matrix,
)
from .spaces import (
    Config,
    block_swap,
    bordered_witness,
    config_dimension,
    corner_form_space,
    enumerate_configs,
    extremal_space,
    max_dimension,
    nilpotent_jordan_conjugator,
    regular_witness,
)
from .spectral import (
    SpectralProfile,
    count_distinct_by_sylvester_rank,
    count_distinct_eigenvalues,
    count_simple_eigenvalues,
    is_regular,
    minimal_polynomial_degree,
    spectral_profile,
)
from .subspaces import (
    MatrixSubspace,
    UnitImplicationViolation,
    canonicalize,
    check_unit_implications,
    conjugate,
    is_borel_invariant,
    restrict_to_zero,
    sum_and_intersection,
)

__version__ = "0.1.0"

__all__ = [
    # scalars and exact kernels
    "Rational",
    "Matrix",
    "Poly",
    "rank",
    "det",
    "inverse",
    "char_poly",
    "poly_gcd",
    "sylvester_matrix",
    "resultant",
    "interpolate",
    # spectral predicates
    "SpectralProfile",
    "spectral_profile",
    "is_regular",
    "count_distinct_eigenvalues",
    "count_distinct_by_sylvester_rank",
    "count_simple_eigenvalues",
    "minimal_polynomial_degree",
    # space constructors and combinatorics
    "max_dimension",
    "extremal_space",
    "corner_form_space",
    "block_swap",
    "regular_witness",
    "bordered_witness",
    "Config",
    "config_dimension",
    "enumerate_configs",
    "nilpotent_jordan_conjugator",
    # subspace algebra
    "MatrixSubspace",
    "canonicalize",
    "sum_and_intersection",
    "conjugate",
    "restrict_to_zero",
    "is_borel_invariant",
    "check_unit_implications",
    "UnitImplicationViolation",
    # degeneration
    "LaurentVec",
    "TFamily",
    "WeightComponent",
    "corner_weights",
    "one_param_family",
    "grassmannian_limit",
    "weight_decomposition",
    "component_dims",
    "BorderProfile",
    "border_profile",
    # identity checks
    "BorderedInstance",
    "DiscriminantInstance",
    "CoefficientComparison",
    "ResultantCoefficientReport",
    "perturbation_sums",
    "closed_form_char_poly",
    "two_zeros_resultant_check",
    "verify_two_zeros_root_structure",
    "quartic_discriminant_check",
    "bordered_matrix",
    # harness
    "CheckResult",
    "VerificationReport",
    "verify_extremal",
    "maximality_probe",
    "run_full_suite",
    # errors
    "EigenboundError",
    "NonSquareError",
    "SizeMismatchError",
    "EmptyAmbientError",
    "SingularMatrixError",
    "BothZeroError",
    "DegreeTooLowError",
    "DuplicateAbscissaError",
    "InsufficientSamplesError",
    "BadBudgetError",
    "DuplicateLambdaError",
    "DegenerateLambdasError",
    "InfeasibleConfigError",
    "NotStrictlyUpperError",
    "RankDeficientError",
    "NotBorelInvariantError",
    "DegenerateFamilyError",
    "NotPhiStableError",
    "PreconditionFailedError",
]
