"""Dense exact matrices over the rationals.

Entries are fractions.Fraction, stored row-major in an immutable tuple.  The
rank and determinant kernels clear denominators and run fraction-free
(Bareiss) elimination over the integers, which keeps intermediate values at
minor size instead of letting naive fraction arithmetic blow up.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import NonSquareError, SingularMatrixError, SizeMismatchError

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class Matrix:
    """Immutable rows x cols matrix of Fraction entries (row-major)."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise SizeMismatchError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> "Matrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        flat: list[Fraction] = []
        for row in rows:
            if len(row) != nc:
                raise SizeMismatchError("ragged rows")
            flat.extend(Fraction(v) for v in row)
        return cls(nr, nc, tuple(flat))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, (_ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(_ONE if i == j else _ZERO for i in range(n) for j in range(n)))

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "Matrix":
        """The matrix unit with a single 1 in row i, column j (0-based)."""
        ent = [_ZERO] * (n * n)
        ent[i * n + j] = _ONE
        return cls(n, n, tuple(ent))

    @classmethod
    def diagonal(cls, values: Sequence[Scalar]) -> "Matrix":
        n = len(values)
        ent = [_ZERO] * (n * n)
        for i, v in enumerate(values):
            ent[i * n + i] = Fraction(v)
        return cls(n, n, tuple(ent))

    @classmethod
    def from_vector(cls, rows: int, cols: int, vec: Sequence[Fraction]) -> "Matrix":
        return cls(rows, cols, tuple(Fraction(v) for v in vec))

    # -- access ------------------------------------------------------------

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def rows_list(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def vectorize(self) -> tuple[Fraction, ...]:
        """Row-major flattening; the coordinate order used everywhere."""
        return self.entries

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def diag(self) -> tuple[Fraction, ...]:
        return tuple(self[i, i] for i in range(min(self.rows, self.cols)))

    def trace(self) -> Fraction:
        if not self.is_square:
            raise NonSquareError("trace of a non-square matrix")
        return sum(self.diag(), _ZERO)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.entries)

    def is_upper_triangular(self) -> bool:
        return all(self[i, j] == 0 for i in range(self.rows) for j in range(min(i, self.cols)))

    def is_strictly_upper_triangular(self) -> bool:
        return all(
            self[i, j] == 0 for i in range(self.rows) for j in range(min(i + 1, self.cols))
        )

    # -- arithmetic --------------------------------------------------------

    def _same_shape(self, other: "Matrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise SizeMismatchError(
                f"shape {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c: Scalar) -> "Matrix":
        f = Fraction(c)
        return Matrix(self.rows, self.cols, tuple(f * a for a in self.entries))

    def __mul__(self, other: Union["Matrix", Scalar]) -> "Matrix":
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise SizeMismatchError(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
                )
            n, m, p = self.rows, self.cols, other.cols
            a, b = self.entries, other.entries
            out = [_ZERO] * (n * p)
            for i in range(n):
                arow = a[i * m : (i + 1) * m]
                for kk in range(m):
                    v = arow[kk]
                    if v == 0:
                        continue
                    boff = kk * p
                    ooff = i * p
                    for j in range(p):
                        out[ooff + j] += v * b[boff + j]
            return Matrix(n, p, tuple(out))
        return self.scale(other)

    def __rmul__(self, other: Scalar) -> "Matrix":
        return self.scale(other)

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows))
        )

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: {body})"


# -- fraction-free kernels --------------------------------------------------


def _int_rows(m: Matrix) -> tuple[list[list[int]], list[int]]:
    """Clear denominators row by row; returns (integer rows, row multipliers)."""
    out: list[list[int]] = []
    mults: list[int] = []
    for i in range(m.rows):
        row = m.row(i)
        lcm = 1
        for v in row:
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
        out.append([int(v * lcm) for v in row])
        mults.append(lcm)
    return out, mults


def rank(m: Matrix) -> int:
    """Exact rank over the rationals (fraction-free elimination)."""
    work, _ = _int_rows(m)
    return int_rank(work)


def det(m: Matrix) -> Fraction:
    """Exact determinant (Bareiss elimination over the integers)."""
    if not m.is_square:
        raise NonSquareError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return _ONE
    work, mults = _int_rows(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if work[k][k] == 0:
            piv = None
            for i in range(k + 1, n):
                if work[i][k] != 0:
                    piv = i
                    break
            if piv is None:
                return _ZERO
            work[k], work[piv] = work[piv], work[k]
            sign = -sign
        for i in range(k + 1, n):
            lead = work[i][k]
            for j in range(k + 1, n):
                work[i][j] = (work[i][j] * work[k][k] - lead * work[k][j]) // prev
            work[i][k] = 0
        prev = work[k][k]
    scale = 1
    for f in mults:
        scale *= f
    return Fraction(sign * work[n - 1][n - 1], scale)


def inverse(m: Matrix) -> Matrix:
    """Exact inverse; raises SingularMatrixError when det(m) = 0."""
    if not m.is_square:
        raise NonSquareError("inverse of a non-square matrix")
    n = m.rows
    work = [list(m.row(i)) + [_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = None
        for i in range(c, n):
            if work[i][c] != 0:
                piv = i
                break
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        work[c], work[piv] = work[piv], work[c]
        inv = _ONE / work[c][c]
        work[c] = [v * inv for v in work[c]]
        for i in range(n):
            if i != c and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[c])]
    return Matrix.from_rows([row[n:] for row in work])


def scaled_integer_matrix(m: Matrix) -> tuple[list[list[int]], int]:
    """d*m as integer rows together with the single scalar d (lcm of all
    denominators).  A common scalar keeps the result similar to a multiple of
    m, which the spectral predicates rely on."""
    d = 1
    for v in m.entries:
        d = d * v.denominator // math.gcd(d, v.denominator)
    rows = [[int(v * d) for v in m.row(i)] for i in range(m.rows)]
    return rows, d


def int_matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    p = len(b[0])
    m = len(b)
    out = [[0] * p for _ in range(n)]
    for i in range(n):
        arow = a[i]
        orow = out[i]
        for kk in range(m):
            v = arow[kk]
            if v:
                brow = b[kk]
                for j in range(p):
                    orow[j] += v * brow[j]
    return out


def int_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix, fraction-free (works on a copy)."""
    work = [list(r) for r in rows]
    nr = len(work)
    nc = len(work[0]) if nr else 0
    prev = 1
    r = 0
    for c in range(nc):
        if r == nr:
            break
        piv = None
        for i in range(r, nr):
            if work[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(r + 1, nr):
            if any(work[i][j] != 0 for j in range(c, nc)):
                lead = work[i][c]
                for j in range(c + 1, nc):
                    work[i][j] = (work[i][j] * work[r][c] - lead * work[r][j]) // prev
                work[i][c] = 0
        prev = work[r][c]
        r += 1
    return r
