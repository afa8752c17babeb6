from __future__ import annotations

from fractions import Fraction
from random import Random

import pytest

from eigenbound.matrices import Matrix
from eigenbound.polynomials import Poly


@pytest.fixture
def rng() -> Random:
    return Random(20240517)


def frac(num: int, den: int = 1) -> Fraction:
    return Fraction(num, den)


def poly_determinant(a: Matrix) -> Poly:
    """Independent characteristic-polynomial oracle: cofactor expansion of
    det(tI - a) over polynomial entries.  Exponential; keep n small."""
    n = a.rows
    entries = [
        [
            Poly.from_coeffs([-a[i, j], 1]) if i == j else Poly.constant(-a[i, j])
            for j in range(n)
        ]
        for i in range(n)
    ]
    return _poly_det(entries)


def _poly_det(rows: list[list[Poly]]) -> Poly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = Poly.constant(0)
    for j in range(n):
        if rows[0][j].is_zero:
            continue
        minor = [[rows[i][c] for c in range(n) if c != j] for i in range(1, n)]
        term = rows[0][j] * _poly_det(minor)
        acc = acc + (term if j % 2 == 0 else -term)
    return acc


def cofactor_det(a: Matrix) -> Fraction:
    """Independent determinant oracle (Laplace expansion)."""
    n = a.rows
    if n == 1:
        return a[0, 0]
    acc = Fraction(0)
    for j in range(n):
        if a[0, j] == 0:
            continue
        minor = Matrix.from_rows(
            [[a[i, c] for c in range(n) if c != j] for i in range(1, n)]
        )
        term = a[0, j] * cofactor_det(minor)
        acc += term if j % 2 == 0 else -term
    return acc
