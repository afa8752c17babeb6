"""Spectral predicates computed by rank and gcd conditions.

No eigenvalue is ever named: regularity is a rank condition on the commutator
map, the number of distinct eigenvalues comes from the degree of
gcd(p, p'), and the number of simple eigenvalues from the rank of a
stabilized power of p'(A).  Everything is exact over the rationals and valid
for matrices whose eigenvalues are irrational or complex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonSquareError
from .linalg import IncrementalSpan
from .matrices import Matrix, int_matmul, int_rank, rank, scaled_integer_matrix
from .polynomials import char_poly, poly_gcd, sylvester_matrix


@dataclass(frozen=True)
class SpectralProfile:
    """Size, distinct/simple eigenvalue counts and regularity of one matrix."""

    n: int
    distinct_count: int
    simple_count: int
    regular: bool


def _require_square(a: Matrix) -> int:
    if not a.is_square:
        raise NonSquareError("spectral predicates need a square matrix")
    return a.rows


def adjoint_action_matrix(a: Matrix) -> Matrix:
    """The n^2 x n^2 matrix of B -> AB - BA in the matrix-unit basis.

    Column (k,l) holds the vectorization of A E_kl - E_kl A; rows follow the
    same row-major vectorization.
    """
    n = _require_square(a)
    cols: list[list] = []
    for k in range(n):
        for l in range(n):
            col = [a[i, k] if l == j else 0 for i in range(n) for j in range(n)]
            for j in range(n):
                col[k * n + j] -= a[l, j]
            cols.append(col)
    return Matrix.from_rows(cols).transpose()


def is_regular(a: Matrix) -> bool:
    """True iff the centralizer of a has the minimal dimension n.

    Tested as rank(ad_a) >= n^2 - n; the rank never exceeds that value
    because the centralizer always contains the polynomials in a.
    """
    n = _require_square(a)
    b, _ = scaled_integer_matrix(a)
    cols: list[list[int]] = []
    for k in range(n):
        for l in range(n):
            col = [b[i][k] if l == j else 0 for i in range(n) for j in range(n)]
            for j in range(n):
                col[k * n + j] -= b[l][j]
            cols.append(col)
    return int_rank(cols) >= n * n - n


def count_distinct_eigenvalues(a: Matrix) -> int:
    """Number of distinct complex eigenvalues: n - deg gcd(p, p')."""
    n = _require_square(a)
    p = char_poly(a)
    return n - poly_gcd(p, p.derivative()).degree


def count_distinct_by_sylvester_rank(a: Matrix) -> int:
    """Second route to the distinct count: deg gcd(p, p') equals
    2n - 1 - rank of the Sylvester matrix of p and p', so the count is
    rank - (n - 1).  Needs n >= 2 so that p' has positive degree."""
    n = _require_square(a)
    p = char_poly(a)
    return rank(sylvester_matrix(p, p.derivative())) - (n - 1)


def count_simple_eigenvalues(a: Matrix) -> int:
    """Number of eigenvalues of algebraic multiplicity one.

    Equals rank((p'(a))^n): the nilpotent part of p'(a) dies by the n-th
    power, and each simple eigenvalue contributes exactly one nonzero
    eigenvalue of p'(a).  The n-th power is reached by repeated squaring.
    """
    n = _require_square(a)
    c, _ = scaled_integer_matrix(a)
    # integer char poly of the scaled matrix; same simple-root structure
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        am = int_matmul(c, m)
        ck = -sum(am[i][i] for i in range(n)) // k
        coeffs[n - k] = ck
        if k < n:
            m = [[am[i][j] + (ck if i == j else 0) for j in range(n)] for i in range(n)]
    dcoeffs = [i * coeffs[i] for i in range(1, n + 1)]
    acc = [[0] * n for _ in range(n)]
    for i in range(n):
        acc[i][i] = dcoeffs[-1]
    for cf in reversed(dcoeffs[:-1]):
        acc = int_matmul(acc, c)
        for i in range(n):
            acc[i][i] += cf
    power = 1
    while power < n:
        acc = int_matmul(acc, acc)
        power *= 2
    return int_rank(acc)


def minimal_polynomial_degree(a: Matrix) -> int:
    """Degree of the minimal polynomial, by Krylov-style linear dependence.

    Independent of the rank route used by is_regular; serves as its oracle:
    a is regular iff this degree equals n.
    """
    n = _require_square(a)
    span = IncrementalSpan()
    power = Matrix.identity(n)
    for k in range(n + 1):
        if not span.add(power.vectorize()):
            return k
        power = power * a
    return n


def spectral_profile(a: Matrix) -> SpectralProfile:
    """All three predicates of one matrix, bundled."""
    n = _require_square(a)
    return SpectralProfile(
        n=n,
        distinct_count=count_distinct_eigenvalues(a),
        simple_count=count_simple_eigenvalues(a),
        regular=is_regular(a),
    )
