"""Exception types raised by the exact kernels and constructors.

Every class subclasses ValueError so callers that do not care about the
specific failure can catch one base type.
"""

from __future__ import annotations


class EigenboundError(ValueError):
    """Base class for all errors raised by this package."""


class NonSquareError(EigenboundError):
    """A square matrix was required."""


class SizeMismatchError(EigenboundError):
    """Operands have incompatible shapes or ambient sizes."""


class EmptyAmbientError(EigenboundError):
    """An empty basis was given without an explicit ambient size."""


class SingularMatrixError(EigenboundError):
    """An invertible matrix was required."""


class BothZeroError(EigenboundError):
    """gcd of the zero polynomial with itself is undefined."""


class DegreeTooLowError(EigenboundError):
    """Sylvester matrices and resultants need both degrees >= 1."""


class DuplicateAbscissaError(EigenboundError):
    """Interpolation nodes must be pairwise distinct."""


class InsufficientSamplesError(EigenboundError):
    """Fewer samples than the degree bound requires."""


class BadBudgetError(EigenboundError):
    """The eigenvalue budget k (or a block size) is out of range."""


class DuplicateLambdaError(EigenboundError):
    """Spectrum parameters must be pairwise distinct."""


class DegenerateLambdasError(EigenboundError):
    """Discriminant checks need distinct nonzero lambda parameters."""


class InfeasibleConfigError(EigenboundError):
    """A diagonal-block configuration violates its placement constraints."""


class NotStrictlyUpperError(EigenboundError):
    """A strictly upper triangular matrix was required."""


class RankDeficientError(EigenboundError):
    """The matrix does not have the rank the operation requires."""


class NotBorelInvariantError(EigenboundError):
    """The subspace is not invariant under upper-triangular conjugation."""


class DegenerateFamilyError(EigenboundError):
    """The family basis is linearly dependent over the Laurent field."""


class NotPhiStableError(EigenboundError):
    """The subspace is not fixed by the one-parameter conjugation."""


class PreconditionFailedError(EigenboundError):
    """A documented precondition of the check does not hold."""
