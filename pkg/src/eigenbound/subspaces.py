"""Exact linear subspaces of n x n rational matrices.

A subspace is stored as the reduced row echelon form of the row-major
vectorizations of its basis, so two equal subspaces always carry identical
bases and compare equal structurally.  Membership reduction walks the pivot
columns sparsely, which keeps the Borel-invariance sweep cheap even for the
large unit-spanned spaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    EmptyAmbientError,
    NotBorelInvariantError,
    SizeMismatchError,
)
from .linalg import Vec, nullspace, rref
from .matrices import Matrix, inverse

_ZERO = Fraction(0)


class MatrixSubspace:
    """Linear subspace of n x n matrices with a canonical reduced basis."""

    __slots__ = ("n", "basis", "_pivots", "_row_items")

    def __init__(self, n: int, rows: Sequence[Vec], pivots: Sequence[int]):
        self.n = n
        self.basis: tuple[Matrix, ...] = tuple(Matrix.from_vector(n, n, r) for r in rows)
        self._pivots: tuple[int, ...] = tuple(pivots)
        self._row_items: tuple[tuple[tuple[int, Fraction], ...], ...] = tuple(
            tuple((c, v) for c, v in enumerate(r) if v != 0) for r in rows
        )

    # -- construction --------------------------------------------------------

    @classmethod
    def span(cls, matrices: Iterable[Matrix], n: int | None = None) -> "MatrixSubspace":
        """Canonicalize a spanning set into its RREF basis."""
        mats = list(matrices)
        if not mats:
            if n is None:
                raise EmptyAmbientError("empty basis needs an explicit ambient size")
            return cls(n, [], [])
        size = mats[0].rows
        for m in mats:
            if m.rows != size or m.cols != size:
                raise SizeMismatchError("all basis matrices must be square of one size")
        if n is not None and n != size:
            raise SizeMismatchError(f"ambient size {n} does not match matrices of size {size}")
        rows, pivots = rref(m.vectorize() for m in mats)
        return cls(size, rows, pivots)

    @classmethod
    def zero(cls, n: int) -> "MatrixSubspace":
        return cls(n, [], [])

    # -- basic queries --------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self) -> tuple[Vec, ...]:
        return tuple(m.vectorize() for m in self.basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixSubspace):
            return NotImplemented
        return self.n == other.n and self.vectors() == other.vectors()

    def __hash__(self) -> int:
        return hash((self.n, self.vectors()))

    def __repr__(self) -> str:
        return f"MatrixSubspace(n={self.n}, dim={self.dim})"

    def contains_vector(self, vec: Sequence[Fraction]) -> bool:
        work = {c: v for c, v in enumerate(vec) if v != 0}
        for items, pcol in zip(self._row_items, self._pivots):
            coef = work.get(pcol)
            if coef:
                for c, v in items:
                    nv = work.get(c, _ZERO) - coef * v
                    if nv:
                        work[c] = nv
                    else:
                        work.pop(c, None)
        return not work

    def contains(self, a: Matrix) -> bool:
        """True iff a is a rational linear combination of the basis."""
        if a.rows != self.n or a.cols != self.n:
            raise SizeMismatchError(f"matrix size {a.rows}x{a.cols} vs ambient {self.n}")
        return self.contains_vector(a.vectorize())

    def coordinates(self, a: Matrix) -> tuple[Fraction, ...] | None:
        """Basis coordinates of a, or None when a is outside the subspace."""
        if a.rows != self.n or a.cols != self.n:
            raise SizeMismatchError(f"matrix size {a.rows}x{a.cols} vs ambient {self.n}")
        work = {c: v for c, v in enumerate(a.vectorize()) if v != 0}
        coords = []
        for items, pcol in zip(self._row_items, self._pivots):
            coef = work.get(pcol, _ZERO)
            coords.append(coef)
            if coef:
                for c, v in items:
                    nv = work.get(c, _ZERO) - coef * v
                    if nv:
                        work[c] = nv
                    else:
                        work.pop(c, None)
        return None if work else tuple(coords)


def canonicalize(matrices: Iterable[Matrix], n: int | None = None) -> MatrixSubspace:
    """Alias for MatrixSubspace.span."""
    return MatrixSubspace.span(matrices, n)


def sum_and_intersection(
    v: MatrixSubspace, w: MatrixSubspace
) -> tuple[MatrixSubspace, MatrixSubspace]:
    """Exact sum and intersection (Zassenhaus double-block reduction)."""
    if v.n != w.n:
        raise SizeMismatchError("subspaces live in different ambient sizes")
    size = v.n * v.n
    block_rows: list[list[Fraction]] = []
    for row in v.vectors():
        block_rows.append(list(row) + list(row))
    for row in w.vectors():
        block_rows.append(list(row) + [_ZERO] * size)
    reduced, _ = rref(block_rows)
    sum_rows: list[Vec] = []
    int_rows: list[Vec] = []
    for row in reduced:
        left, right = row[:size], row[size:]
        if any(x != 0 for x in left):
            sum_rows.append(left)
        elif any(x != 0 for x in right):
            int_rows.append(right)
    total = MatrixSubspace.span([Matrix.from_vector(v.n, v.n, r) for r in sum_rows], v.n)
    meet = MatrixSubspace.span([Matrix.from_vector(v.n, v.n, r) for r in int_rows], v.n)
    return total, meet


def conjugate(v: MatrixSubspace, p: Matrix) -> MatrixSubspace:
    """The subspace {p B p^-1 : B in v}."""
    if p.rows != v.n or p.cols != v.n:
        raise SizeMismatchError(f"conjugator size {p.rows}x{p.cols} vs ambient {v.n}")
    pinv = inverse(p)
    return MatrixSubspace.span([p * b * pinv for b in v.basis], v.n)


def restrict_to_zero(v: MatrixSubspace, coords: Iterable[tuple[int, int]]) -> MatrixSubspace:
    """The subspace of members vanishing at the given (row, col) positions."""
    coord_list = list(coords)
    if not coord_list:
        return v
    rows = [[b[i, j] for b in v.basis] for (i, j) in coord_list]
    kernel = nullspace(rows, v.dim)
    members = []
    for combo in kernel:
        acc = Matrix.zeros(v.n)
        for c, b in zip(combo, v.basis):
            if c != 0:
                acc = acc + b.scale(c)
        members.append(acc)
    return MatrixSubspace.span(members, v.n)


# -- Borel invariance ---------------------------------------------------------


def _unit_commutator_vec(b: Matrix, i: int, j: int) -> list[Fraction]:
    """Vectorization of E_ij b - b E_ij, built without full products."""
    n = b.rows
    out = [_ZERO] * (n * n)
    for c in range(n):  # E_ij b: row i receives row j of b
        out[i * n + c] += b[j, c]
    for r in range(n):  # b E_ij: column j receives column i of b
        out[r * n + j] -= b[r, i]
    return out


def is_borel_invariant(v: MatrixSubspace) -> bool:
    """True iff v is stable under conjugation by all invertible upper
    triangular matrices.

    Finite test over group generators: torus invariance via the weight-graded
    split of each basis element (its diagonal part and each off-diagonal
    entry separately), unipotent invariance via the s- and s^2-coefficients
    of (I + s E_ij) B (I + s E_ij)^-1 for every i < j.
    """
    n = v.n
    unit_known: dict[tuple[int, int], bool] = {}

    def unit_in(i: int, j: int) -> bool:
        key = (i, j)
        if key not in unit_known:
            unit_known[key] = v.contains(Matrix.unit(n, i, j))
        return unit_known[key]

    for b in v.basis:
        for i in range(n):
            for j in range(n):
                if i != j and b[i, j] != 0 and not unit_in(i, j):
                    return False
        if not v.contains(Matrix.diagonal(b.diag())):
            return False
    for i in range(n):
        for j in range(i + 1, n):
            for b in v.basis:
                if not v.contains_vector(_unit_commutator_vec(b, i, j)):
                    return False
                # s^2 coefficient: -E_ij b E_ij = -b[j,i] E_ij
                if b[j, i] != 0 and not unit_in(i, j):
                    return False
    return True


@dataclass(frozen=True)
class UnitImplicationViolation:
    """A matrix unit forced by an entry pattern but missing from the space.

    rule is one of 'transpose_entry_forces_unit' (a nonzero (j,i) entry with
    i < j), 'entry_forces_unit' (a nonzero off-diagonal (i,j) entry), or
    'diagonal_gap_forces_unit' (diagonal entries i < j that can differ).
    Indices are 0-based.
    """

    rule: str
    i: int
    j: int


def check_unit_implications(v: MatrixSubspace) -> list[UnitImplicationViolation]:
    """Check the forced-unit implications for a Borel-invariant space.

    For every basis element with a nonzero entry at (j,i) or (i,j), or a
    diagonal mismatch between positions i < j, the unit E_ij must belong to
    the space; returns all violations (empty when the implications hold).
    """
    if not is_borel_invariant(v):
        raise NotBorelInvariantError("unit implications need a Borel-invariant space")
    n = v.n
    support = set()
    mismatch = set()
    for b in v.basis:
        for i in range(n):
            for j in range(n):
                if i != j and b[i, j] != 0:
                    support.add((i, j))
        for i in range(n):
            for j in range(i + 1, n):
                if b[i, i] != b[j, j]:
                    mismatch.add((i, j))
    violations = []
    unit_known: dict[tuple[int, int], bool] = {}

    def unit_in(i: int, j: int) -> bool:
        key = (i, j)
        if key not in unit_known:
            unit_known[key] = v.contains(Matrix.unit(n, i, j))
        return unit_known[key]

    for i in range(n):
        for j in range(i + 1, n):
            if (j, i) in support and not unit_in(i, j):
                violations.append(UnitImplicationViolation("transpose_entry_forces_unit", i, j))
    for (i, j) in sorted(support):
        if not unit_in(i, j):
            violations.append(UnitImplicationViolation("entry_forces_unit", i, j))
    for (i, j) in sorted(mismatch):
        if not unit_in(i, j):
            violations.append(UnitImplicationViolation("diagonal_gap_forces_unit", i, j))
    return violations
