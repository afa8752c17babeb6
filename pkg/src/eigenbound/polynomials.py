"""Univariate polynomials over the rationals.

Coefficients are stored lowest degree first with no trailing zeros; the zero
polynomial has an empty coefficient tuple.  The gcd runs a subresultant
remainder sequence over the integers (content stripped) to keep coefficient
growth at determinant size, and the characteristic polynomial uses the
Faddeev-LeVerrier recurrence on a denominator-cleared integer matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    BothZeroError,
    DegreeTooLowError,
    DuplicateAbscissaError,
    InsufficientSamplesError,
    NonSquareError,
)
from .matrices import Matrix, det, scaled_integer_matrix, int_matmul

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _trim(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Poly:
    """Polynomial with Fraction coefficients, lowest degree first."""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar]) -> "Poly":
        return cls(_trim(coeffs))

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls.from_coeffs([c])

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> "Poly":
        return cls.from_coeffs([0] * degree + [c])

    @classmethod
    def from_roots(cls, roots: Sequence[Scalar]) -> "Poly":
        p = cls.constant(1)
        for r in roots:
            p = p * cls.from_coeffs([-Fraction(r), 1])
        return p

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if self.is_zero:
            return _ZERO
        return self.coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _ZERO

    def coeffs_desc(self) -> tuple[Fraction, ...]:
        """Coefficients highest degree first (Sylvester row layout)."""
        return tuple(reversed(self.coeffs))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(_trim(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __sub__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(_trim(self.coeff(i) - other.coeff(i) for i in range(n)))

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: Union["Poly", Scalar]) -> "Poly":
        if not isinstance(other, Poly):
            f = Fraction(other)
            return Poly(_trim(f * c for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return Poly(())
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(_trim(out))

    def __rmul__(self, other: Scalar) -> "Poly":
        return self * other

    def __pow__(self, n: int) -> "Poly":
        result = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, divisor: "Poly") -> tuple["Poly", "Poly"]:
        """Exact quotient and remainder over the rationals."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dcs = divisor.coeffs
        dd = divisor.degree
        lead = divisor.leading()
        q = [_ZERO] * max(0, len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            if rem[i] == 0:
                continue
            f = rem[i] / lead
            q[i - dd] = f
            for j, c in enumerate(dcs):
                rem[i - dd + j] -= f * c
        return Poly(_trim(q)), Poly(_trim(rem))

    def derivative(self) -> "Poly":
        return Poly(_trim(i * c for i, c in enumerate(self.coeffs) if i >= 1))

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        inv = _ONE / self.leading()
        return Poly(tuple(c * inv for c in self.coeffs))

    def __call__(self, x: Scalar) -> Fraction:
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * Fraction(x) + c
        return acc

    def eval_matrix(self, a: Matrix) -> Matrix:
        """Horner evaluation at a square matrix."""
        if not a.is_square:
            raise NonSquareError("polynomial evaluation needs a square matrix")
        n = a.rows
        acc = Matrix.zeros(n)
        for c in reversed(self.coeffs):
            acc = acc * a + Matrix.identity(n).scale(c)
        return acc

    def __repr__(self) -> str:
        if self.is_zero:
            return "Poly(0)"
        terms = [f"{c}*t^{i}" for i, c in enumerate(self.coeffs) if c != 0]
        return "Poly(" + " + ".join(terms) + ")"


# -- gcd via integer subresultant remainder sequence -------------------------


def _int_primitive(coeffs: Sequence[Fraction]) -> list[int]:
    """Clear denominators and divide by integer content (sign of lead kept)."""
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return [v // g for v in ints] if g else list(ints)


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer polynomials: lc(b)^(da-db+1) * a mod b."""
    da = len(a) - 1
    db = len(b) - 1
    r = list(a)
    n = da - db + 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        n -= 1
        r = [c * lb for c in r]
        for j in range(db + 1):
            r[shift + j] -= lr * b[j]
        while r and r[-1] == 0:
            r.pop()
    if r and n > 0:
        f = lb**n
        r = [c * f for c in r]
    return r


def _exact_div(values: list[int], divisor: int) -> list[int]:
    out = []
    for v in values:
        q, rem = divmod(v, divisor)
        if rem:
            raise ArithmeticError("inexact division in subresultant sequence")
        out.append(q)
    return out


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over the rationals (subresultant sequence, content stripped)."""
    if p.is_zero and q.is_zero:
        raise BothZeroError("gcd(0, 0) is undefined")
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    a = _int_primitive(p.coeffs)
    b = _int_primitive(q.coeffs)
    if len(a) < len(b):
        a, b = b, a
    g, h = 1, 1
    while True:
        d = (len(a) - 1) - (len(b) - 1)
        r = _pseudo_rem(a, b)
        if not r:
            break
        if len(r) == 1:
            return Poly.constant(1)
        a, b = b, _exact_div(r, g * h**d)
        g = a[-1]
        h = h * (g**d) // h**d if d else h  # h = h^(1-d) g^d
    prim = b
    gg = 0
    for v in prim:
        gg = math.gcd(gg, v)
    prim = [v // gg for v in prim]
    return Poly.from_coeffs(prim).monic()


# -- Sylvester matrix, resultant, characteristic polynomial ------------------


def sylvester_matrix(p: Poly, q: Poly) -> Matrix:
    """Sylvester matrix: deg q staggered rows of p's coefficients (highest
    first) followed by deg p staggered rows of q's coefficients."""
    m, l = p.degree, q.degree
    if m < 1 or l < 1:
        raise DegreeTooLowError("sylvester matrix needs both degrees >= 1")
    size = m + l
    rows: list[list[Fraction]] = []
    pc = p.coeffs_desc()
    qc = q.coeffs_desc()
    for r in range(l):
        row = [_ZERO] * size
        for i, c in enumerate(pc):
            row[r + i] = c
        rows.append(row)
    for r in range(m):
        row = [_ZERO] * size
        for i, c in enumerate(qc):
            row[r + i] = c
        rows.append(row)
    return Matrix.from_rows(rows)


def resultant(p: Poly, q: Poly) -> Fraction:
    """Determinant of the Sylvester matrix."""
    return det(sylvester_matrix(p, q))


def char_poly(a: Matrix) -> Poly:
    """Monic characteristic polynomial det(tI - a).

    Runs Faddeev-LeVerrier over the integers on d*a (d the common denominator)
    and rescales: det(tI - a) = d^-n * det((dt)I - da).
    """
    if not a.is_square:
        raise NonSquareError("characteristic polynomial of a non-square matrix")
    n = a.rows
    if n == 0:
        return Poly.constant(1)
    b, d = scaled_integer_matrix(a)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        am = int_matmul(b, m)
        c = -sum(am[i][i] for i in range(n)) // k
        coeffs[n - k] = c
        if k < n:
            m = [[am[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
    return Poly.from_coeffs(Fraction(coeffs[i], d ** (n - i)) for i in range(n + 1))


def interpolate(samples: Sequence[tuple[Scalar, Scalar]], degree_bound: int) -> Poly:
    """The unique polynomial of degree <= degree_bound through the samples.

    Newton's divided differences over the rationals.  All abscissae must be
    distinct; at least degree_bound + 1 samples are required, and any extra
    samples must be consistent with the interpolant.
    """
    pts = [(Fraction(x), Fraction(y)) for x, y in samples]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissaError("interpolation abscissae must be distinct")
    if len(pts) < degree_bound + 1:
        raise InsufficientSamplesError(
            f"need at least {degree_bound + 1} samples, got {len(pts)}"
        )
    node_pts = pts[: degree_bound + 1]
    coeffs = [y for _, y in node_pts]
    nodes = [x for x, _ in node_pts]
    for j in range(1, len(node_pts)):
        for i in range(len(node_pts) - 1, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (nodes[i] - nodes[i - j])
    poly = Poly.constant(0)
    basis = Poly.constant(1)
    for c, x in zip(coeffs, nodes):
        poly = poly + basis * c
        basis = basis * Poly.from_coeffs([-x, 1])
    for x, y in pts[degree_bound + 1 :]:
        if poly(x) != y:
            raise ValueError("samples are not consistent with the degree bound")
    return poly
