"""Internal exact row-vector kernels over the rationals.

Vectors are tuples of Fraction.  Everything here is pure and returns fresh
tuples; callers treat the results as immutable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def rref(rows: Iterable[Sequence[Fraction]]) -> tuple[list[Vec], list[int]]:
    """Reduced row echelon form with unit pivots, zero rows dropped.

    Returns (rows, pivot_columns).  Pivot order follows column order, so the
    output is a canonical basis of the row space.
    """
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = _ONE / work[r][c]
        work[r] = [v * inv for v in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return [tuple(row) for row in work[:r]], pivots


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[Vec]:
    """Canonical basis of {x : M x = 0} for the matrix with the given rows."""
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis: list[Vec] = []
    for f in free:
        x = [_ZERO] * ncols
        x[f] = _ONE
        for r, p in enumerate(pivots):
            x[p] = -reduced[r][f]
        basis.append(tuple(x))
    return basis


class IncrementalSpan:
    """Row space built one vector at a time, tracking independence."""

    def __init__(self) -> None:
        self._rows: list[list[Fraction]] = []
        self._pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self._rows)

    def add(self, vec: Sequence[Fraction]) -> bool:
        """Insert vec; returns True if it enlarged the span."""
        work = list(vec)
        for row, p in zip(self._rows, self._pivots):
            if work[p] != 0:
                f = work[p]
                work = [a - f * b for a, b in zip(work, row)]
        for c, v in enumerate(work):
            if v != 0:
                inv = _ONE / v
                work = [x * inv for x in work]
                self._rows.append(work)
                self._pivots.append(c)
                order = sorted(range(len(self._pivots)), key=self._pivots.__getitem__)
                self._rows = [self._rows[i] for i in order]
                self._pivots = [self._pivots[i] for i in order]
                return True
        return False

    def contains(self, vec: Sequence[Fraction]) -> bool:
        work = list(vec)
        for row, p in zip(self._rows, self._pivots):
            if work[p] != 0:
                f = work[p]
                work = [a - f * b for a, b in zip(work, row)]
        return all(v == 0 for v in work)
