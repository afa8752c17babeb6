"""Constructors for extremal matrix spaces, spectral witnesses, and the
block-configuration combinatorics behind the dimension bound.

The extremal space on parameters (n, k, p) is spanned by matrix units in its
free blocks plus one shared-scalar generator, so its dimension can be read
off the construction and cross-checked against the closed-form bound.
Indices in this module are 0-based; parameter vectors follow the positional
conventions documented per function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import (
    BadBudgetError,
    DuplicateLambdaError,
    InfeasibleConfigError,
    NotStrictlyUpperError,
    RankDeficientError,
    SizeMismatchError,
)
from .matrices import Matrix, rank
from .subspaces import MatrixSubspace, conjugate

Scalar = Fraction | int


def max_dimension(n: int, k: int) -> int:
    """C(n,2) + C(k,2) + 1, the largest dimension of a subspace of n x n
    matrices all of whose members have at most k distinct eigenvalues."""
    if not 1 <= k < n:
        raise BadBudgetError(f"need 1 <= k < n, got k={k}, n={n}")
    return comb(n, 2) + comb(k, 2) + 1


def _check_extremal_params(n: int, k: int, p: int) -> int:
    if not 1 <= k < n:
        raise BadBudgetError(f"need 1 <= k < n, got k={k}, n={n}")
    if not 0 <= p <= n - k + 1:
        raise BadBudgetError(f"need 0 <= p <= n-k+1={n - k + 1}, got p={p}")
    return n - k - p + 1  # size of the trailing triangular block


def extremal_space(n: int, k: int, p: int) -> MatrixSubspace:
    """The dimension-maximal space of matrices with at most k distinct
    eigenvalues, in its standard block form.

    Block sizes are (p, k-1, n-k-p+1).  The middle block row is free to the
    right of the first block column; the outer two blocks form one upper
    triangular frame with equal diagonal entries.
    """
    q = _check_extremal_params(n, k, p)
    frame = list(range(p)) + list(range(p + k - 1, n))  # rows/cols of the (A,C,F) frame
    mid = list(range(p, p + k - 1))
    gens: list[Matrix] = []
    scalar = Matrix.zeros(n)
    for i in frame:
        scalar = scalar + Matrix.unit(n, i, i)
    gens.append(scalar)
    for i, j in combinations(frame, 2):
        gens.append(Matrix.unit(n, i, j))
    for i in range(p):  # B block
        for j in mid:
            gens.append(Matrix.unit(n, i, j))
    for i in mid:  # D block
        for j in mid:
            gens.append(Matrix.unit(n, i, j))
    for i in mid:  # E block
        for j in range(p + k - 1, n):
            gens.append(Matrix.unit(n, i, j))
    return MatrixSubspace.span(gens, n)


def block_swap(n: int, k: int, p: int) -> Matrix:
    """Permutation matrix exchanging the first two blocks of sizes (p, k-1)."""
    _check_extremal_params(n, k, p)
    sigma = list(range(n))
    for idx, old in enumerate(range(p, p + k - 1)):
        sigma[old] = idx
    for idx, old in enumerate(range(p)):
        sigma[old] = k - 1 + idx
    m = Matrix.zeros(n)
    for i, s in enumerate(sigma):
        m = m + Matrix.unit(n, s, i)
    return m


def corner_form_space(n: int, k: int, p: int) -> MatrixSubspace:
    """The extremal space with its first two block rows and columns swapped:
    block sizes (k-1, p, n-k-p+1) with the full square block leading."""
    return conjugate(extremal_space(n, k, p), block_swap(n, k, p))


def _check_lambdas(k: int, lambdas: Sequence[Scalar]) -> list[Fraction]:
    vals = [Fraction(v) for v in lambdas]
    if len(vals) != k:
        raise SizeMismatchError(f"need {k} eigenvalue parameters, got {len(vals)}")
    if len(set(vals)) != len(vals):
        raise DuplicateLambdaError("eigenvalue parameters must be pairwise distinct")
    return vals


def regular_witness(n: int, k: int, lambdas: Sequence[Scalar]) -> Matrix:
    """diag(lambda_1..lambda_{k-1}) followed by a Jordan block of size
    n-k+1 with eigenvalue lambda_k: a regular matrix with k distinct
    eigenvalues of which the first k-1 are simple."""
    if not 1 <= k < n:
        raise BadBudgetError(f"need 1 <= k < n, got k={k}, n={n}")
    vals = _check_lambdas(k, lambdas)
    m = Matrix.zeros(n)
    for i in range(k - 1):
        m = m + Matrix.unit(n, i, i).scale(vals[i])
    for i in range(k - 1, n):
        m = m + Matrix.unit(n, i, i).scale(vals[k - 1])
    for i in range(k - 1, n - 1):
        m = m + Matrix.unit(n, i, i + 1)
    return m


def bordered_witness(
    n: int,
    k: int,
    lambdas: Sequence[Scalar],
    b: Sequence[Scalar],
    c: Sequence[Scalar],
    mu: Scalar,
) -> Matrix:
    """The regular witness bordered by mu*b in the first row and c in the
    first column.

    b has length n-k+1 and fills row 0 at columns k-1..n-1; c has length n-1
    and fills column 0 at rows 1..n-1 (entry (0,0) keeps lambda_1).
    """
    if len(b) != n - k + 1:
        raise SizeMismatchError(f"b must have length n-k+1={n - k + 1}, got {len(b)}")
    if len(c) != n - 1:
        raise SizeMismatchError(f"c must have length n-1={n - 1}, got {len(c)}")
    m = regular_witness(n, k, lambdas)
    mu = Fraction(mu)
    for idx, bv in enumerate(b):
        m = m + Matrix.unit(n, 0, k - 1 + idx).scale(mu * Fraction(bv))
    for idx, cv in enumerate(c):
        if Fraction(cv) != 0:
            m = m + Matrix.unit(n, 1 + idx, 0).scale(Fraction(cv))
    return m


# -- diagonal-block configurations -------------------------------------------


@dataclass(frozen=True)
class Config:
    """A feasible arrangement of diagonal unit blocks.

    l counts independent diagonal directions outside the blocks, parts are
    the block sizes (stored nonincreasing).  The eigenvalue budget is the
    derived k = l + sum(parts).  Feasibility requires one spare coordinate
    between consecutive blocks and enough coordinates outside the blocks to
    carry the l diagonal directions.
    """

    n: int
    l: int
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))
        total = sum(self.parts)
        r = len(self.parts)
        if self.l < 0:
            raise InfeasibleConfigError("negative diagonal dimension")
        if any(p < 1 for p in self.parts):
            raise InfeasibleConfigError("block sizes must be positive")
        if r >= 1 and total + (r - 1) > self.n - 1:
            raise InfeasibleConfigError(
                f"blocks of sizes {self.parts} with gaps do not fit in n-1={self.n - 1}"
            )
        if self.l > self.n - total:
            raise InfeasibleConfigError("not enough coordinates outside the blocks")

    @property
    def k(self) -> int:
        """Distinct-eigenvalue budget of the configured space.

        With l = 0 the coordinates outside the blocks still pin the single
        shared eigenvalue zero, which occupies one budget slot.
        """
        total = sum(self.parts)
        return self.l + total if self.l >= 1 else total + 1


def config_dimension(cfg: Config) -> int:
    """l + C(n,2) + sum of C(n_t + 1, 2) over the blocks."""
    return cfg.l + comb(cfg.n, 2) + sum(comb(nt + 1, 2) for nt in cfg.parts)


def _partitions(total: int, largest: int | None = None) -> Iterable[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    cap = min(largest if largest is not None else total, total)
    for first in range(cap, 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def enumerate_configs(
    n: int, k: int, include_empty_diagonal: bool = False
) -> tuple[int, list[Config]]:
    """Exhaustive maximum of config_dimension over feasible configurations.

    Returns (max value, all maximizers).  l ranges over 1..k; passing
    include_empty_diagonal=True also admits l = 0, which never changes the
    maximum but widens the search for cross-checks.
    """
    if not 1 <= k < n:
        raise BadBudgetError(f"need 1 <= k < n, got k={k}, n={n}")
    best = -1
    argmax: list[Config] = []
    for l in range(0 if include_empty_diagonal else 1, k + 1):
        # l = 0 pins the eigenvalue zero outside the blocks, so the blocks
        # may only spend k - 1 budget slots
        block_budget = k - l if l >= 1 else k - 1
        for parts in _partitions(block_budget):
            try:
                cfg = Config(n, l, parts)
            except InfeasibleConfigError:
                continue
            d = config_dimension(cfg)
            if d > best:
                best = d
                argmax = [cfg]
            elif d == best:
                argmax.append(cfg)
    argmax.sort(key=lambda c: (c.l, c.parts))
    return best, argmax


def nilpotent_jordan_conjugator(a: Matrix) -> Matrix:
    """Upper triangular invertible T with a T = T J for the nilpotent Jordan
    block J, where a is strictly upper triangular of rank n-1.

    T stacks the Krylov chain (a^{n-1} x, ..., a x, x) for x = e_n; the
    chain's first vector is nonzero exactly when the rank condition holds.
    """
    if not a.is_square:
        raise NotStrictlyUpperError("need a square strictly upper triangular matrix")
    if not a.is_strictly_upper_triangular():
        raise NotStrictlyUpperError("matrix is not strictly upper triangular")
    n = a.rows
    if rank(a) != n - 1:
        raise RankDeficientError(f"need rank n-1={n - 1}, got {rank(a)}")
    chain: list[tuple[Fraction, ...]] = []
    x = Matrix.from_vector(n, 1, [Fraction(0)] * (n - 1) + [Fraction(1)])
    vec = x
    for _ in range(n):
        chain.append(tuple(vec.entries))
        vec = a * vec
    if all(v == 0 for v in chain[-1]):
        raise RankDeficientError("Krylov chain collapsed before length n")
    cols = list(reversed(chain))  # a^{n-1} x first
    return Matrix.from_rows([[cols[j][i] for j in range(n)] for i in range(n)])
