"""Seeded random generation of rationals, matrices and subspace members.

Entries follow one distribution everywhere: numerator and denominator drawn
uniformly from [-100, 100] with zero denominators rejected.  Callers pass an
explicit random.Random so every experiment is reproducible from its seed.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random
from typing import Sequence

from .matrices import Matrix, det
from .subspaces import MatrixSubspace

DEFAULT_BOUND = 100


def random_rational(rng: Random, bound: int = DEFAULT_BOUND) -> Fraction:
    num = rng.randint(-bound, bound)
    den = 0
    while den == 0:
        den = rng.randint(-bound, bound)
    return Fraction(num, den)


def nonzero_rational(rng: Random, bound: int = DEFAULT_BOUND) -> Fraction:
    value = random_rational(rng, bound)
    while value == 0:
        value = random_rational(rng, bound)
    return value


def distinct_rationals(rng: Random, count: int, bound: int = DEFAULT_BOUND) -> list[Fraction]:
    values: list[Fraction] = []
    while len(values) < count:
        v = random_rational(rng, bound)
        if v not in values:
            values.append(v)
    return values


def distinct_nonzero_rationals(
    rng: Random, count: int, bound: int = DEFAULT_BOUND
) -> list[Fraction]:
    values: list[Fraction] = []
    while len(values) < count:
        v = nonzero_rational(rng, bound)
        if v not in values:
            values.append(v)
    return values


def random_matrix(rng: Random, rows: int, cols: int | None = None, bound: int = DEFAULT_BOUND) -> Matrix:
    cols = rows if cols is None else cols
    return Matrix(rows, cols, tuple(random_rational(rng, bound) for _ in range(rows * cols)))


def random_member(v: MatrixSubspace, rng: Random, bound: int = DEFAULT_BOUND) -> Matrix:
    """Random rational combination of the canonical basis."""
    acc = Matrix.zeros(v.n)
    for b in v.basis:
        c = random_rational(rng, bound)
        if c != 0:
            acc = acc + b.scale(c)
    return acc


def random_invertible_upper(rng: Random, n: int, bound: int = DEFAULT_BOUND) -> Matrix:
    """Upper triangular with nonzero diagonal, hence invertible."""
    ent = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        ent[i][i] = nonzero_rational(rng, bound)
        for j in range(i + 1, n):
            ent[i][j] = random_rational(rng, bound)
    return Matrix.from_rows(ent)


def random_invertible(rng: Random, n: int, bound: int = DEFAULT_BOUND) -> Matrix:
    while True:
        m = random_matrix(rng, n, bound=bound)
        if det(m) != 0:
            return m
