"""Exact verification of the closed-form determinant, resultant-coefficient
and discriminant-coefficient identities behind the two-distinct-zeros
collapse arguments.

All checks work pointwise over the rationals: coefficient polynomials in the
deformation parameter mu are recovered by exact evaluation at small integer
values of mu followed by interpolation, and compared against their closed
forms with zero tolerance.  This module is also where the determinant sign
convention det(A - tI) = (-1)^n det(tI - A) is translated, in one place.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import (
    BadBudgetError,
    DegenerateLambdasError,
    DuplicateLambdaError,
    PreconditionFailedError,
    SizeMismatchError,
)
from .matrices import Matrix, det
from .polynomials import Poly, interpolate, sylvester_matrix

Scalar = Fraction | int


@dataclass(frozen=True)
class BorderedInstance:
    """Parameters of a bordered witness: distinct eigenvalues lambdas
    (length k), border row b at positions k..n, border column c at positions
    2..n (both in 1-based position convention), with the deformation mu kept
    separate."""

    n: int
    k: int
    lambdas: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    c: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lambdas", tuple(Fraction(v) for v in self.lambdas))
        object.__setattr__(self, "b", tuple(Fraction(v) for v in self.b))
        object.__setattr__(self, "c", tuple(Fraction(v) for v in self.c))
        if not 2 <= self.k < self.n:
            raise BadBudgetError(f"need 2 <= k < n, got k={self.k}, n={self.n}")
        if len(self.lambdas) != self.k:
            raise SizeMismatchError(f"need {self.k} lambdas, got {len(self.lambdas)}")
        if len(set(self.lambdas)) != self.k:
            raise DuplicateLambdaError("lambdas must be pairwise distinct")
        if len(self.b) != self.n - self.k + 1:
            raise SizeMismatchError(f"b must have length {self.n - self.k + 1}")
        if len(self.c) != self.n - 1:
            raise SizeMismatchError(f"c must have length {self.n - 1}")

    def b_at(self, pos: int) -> Fraction:
        """b at 1-based position pos in k..n."""
        return self.b[pos - self.k]

    def c_at(self, pos: int) -> Fraction:
        """c at 1-based position pos in 2..n."""
        return self.c[pos - 2]

    @property
    def first_nonzero_b_position(self) -> int:
        """Smallest position >= k with a nonzero b entry; n+1 if none."""
        for pos in range(self.k, self.n + 1):
            if self.b_at(pos) != 0:
                return pos
        return self.n + 1


def perturbation_sums(inst: BorderedInstance) -> list[Fraction]:
    """The n-k+1 convolution sums sum_{p=k}^{k+i} b_p c_{n-k-i+p}, i=0..n-k.

    These are the coefficients of the degree <= n-k polynomial multiplying mu
    in the collapsed characteristic polynomial; the two-zeros collapse forces
    all of them to vanish.
    """
    n, k = inst.n, inst.k
    sums = []
    for i in range(n - k + 1):
        acc = Fraction(0)
        for p in range(k, k + i + 1):
            acc += inst.b_at(p) * inst.c_at(n - k - i + p)
        sums.append(acc)
    return sums


def closed_form_char_poly(inst: BorderedInstance, mu: Scalar) -> Poly:
    """det(A(mu) - tI) for the bordered witness, in closed form.

    Product of (lambda_i - t) for i = 2..k-1 with
    (lambda_1 - t)(lambda_k - t)^(n-k+1)
    + mu * sum_i (-1)^(n-k+i+1) (lambda_k - t)^i * s_i,
    where s_i are the perturbation sums.  Equals (-1)^n times the monic
    characteristic polynomial of the bordered witness matrix.
    """
    n, k = inst.n, inst.k
    mu = Fraction(mu)
    lam = inst.lambdas

    def lin(value: Fraction) -> Poly:  # (value - t)
        return Poly.from_coeffs([value, -1])

    prod = Poly.constant(1)
    for i in range(1, k - 1):
        prod = prod * lin(lam[i])
    core = lin(lam[0]) * lin(lam[k - 1]) ** (n - k + 1)
    sums = perturbation_sums(inst)
    acc = Poly.constant(0)
    for i, s in enumerate(sums):
        if s != 0:
            sign = -1 if (n - k + i + 1) % 2 else 1
            acc = acc + lin(lam[k - 1]) ** i * (sign * s)
    return prod * (core + acc * mu)


@dataclass(frozen=True)
class CoefficientComparison:
    name: str
    expected: Fraction
    actual: Fraction

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class ResultantCoefficientReport:
    """Comparison of the mu-expansion of the collapse resultant with its
    closed forms (constant, mu, and mu^3 coefficients)."""

    polynomial: Poly
    comparisons: tuple[CoefficientComparison, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.comparisons)


def _vieta_polynomials(inst: BorderedInstance, mu: Fraction) -> tuple[Poly, Poly]:
    """The quadratic and cubic trace conditions on the repeated root of the
    collapsed polynomial, as polynomials in that root."""
    n, k = inst.n, inst.k
    g = n - k
    lam_gap = inst.lambdas[0] - inst.lambdas[k - 1]
    s0 = sum((inst.b_at(p) * inst.c_at(p) for p in range(k, n + 1)), Fraction(0))
    s1 = sum((inst.b_at(p) * inst.c_at(p + 1) for p in range(k, n)), Fraction(0))
    quad = Poly.from_coeffs([-mu * s0, -(g + 1) * lam_gap, comb(g + 2, 2)])
    cubic = Poly.from_coeffs([mu * s1, 0, -comb(g + 1, 2) * lam_gap, 2 * comb(g + 2, 3)])
    return quad, cubic


def two_zeros_resultant_check(inst: BorderedInstance) -> ResultantCoefficientReport:
    """Expand the resultant of the two root conditions in mu and compare its
    constant, mu and mu^3 coefficients against the closed forms.

    The resultant (a 5x5 determinant, quadratic rows above cubic rows) is
    cubic in mu; it is recovered exactly by evaluation at mu = 0..3 and
    interpolation.
    """
    n, k = inst.n, inst.k
    g = n - k
    if g < 1:
        raise BadBudgetError(f"need n - k >= 1, got {g}")
    samples = []
    for mu_val in range(4):
        quad, cubic = _vieta_polynomials(inst, Fraction(mu_val))
        samples.append((Fraction(mu_val), det(sylvester_matrix(quad, cubic))))
    poly = interpolate(samples, 3)
    lam_gap = inst.lambdas[0] - inst.lambdas[k - 1]
    s0 = sum((inst.b_at(p) * inst.c_at(p) for p in range(k, n + 1)), Fraction(0))
    s1 = sum((inst.b_at(p) * inst.c_at(p + 1) for p in range(k, n)), Fraction(0))
    expected_mu = Fraction(1, 2) * comb(g + 2, 3) * (g + 1) ** 3 * lam_gap**3 * s1
    expected_mu3 = -4 * comb(g + 2, 3) ** 2 * s0**3
    comparisons = (
        CoefficientComparison("constant", Fraction(0), poly.coeff(0)),
        CoefficientComparison("mu", expected_mu, poly.coeff(1)),
        CoefficientComparison("mu^3", expected_mu3, poly.coeff(3)),
    )
    return ResultantCoefficientReport(poly, comparisons)


def verify_two_zeros_root_structure(
    inst: BorderedInstance, mu_samples: Sequence[Scalar]
) -> bool:
    """With all perturbation sums zero, the collapsed polynomial must factor
    as (t - (lambda_1 - lambda_k)) * t^(n-k+1) for every sampled mu."""
    sums = perturbation_sums(inst)
    if any(s != 0 for s in sums):
        raise PreconditionFailedError("perturbation sums do not vanish")
    n, k = inst.n, inst.k
    g = n - k
    lam_gap = inst.lambdas[0] - inst.lambdas[k - 1]
    s_poly = Poly.from_coeffs(sums)
    expected = Poly.monomial(g + 2) - Poly.monomial(g + 1) * lam_gap
    for mu in mu_samples:
        r = Poly.monomial(g + 2) - Poly.monomial(g + 1) * lam_gap - s_poly * Fraction(mu)
        if r != expected:
            return False
    return True


@dataclass(frozen=True)
class DiscriminantInstance:
    """Parameters of the perturbed quartic t^2(lambda_1 - t)(lambda_2 - t)
    - mu (x_i + t x_pq); with_e_block=False drops the constant perturbation
    (the adjacent-block case)."""

    lambda1: Fraction
    lambda2: Fraction
    x_i: Fraction
    x_pq: Fraction
    with_e_block: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "lambda1", Fraction(self.lambda1))
        object.__setattr__(self, "lambda2", Fraction(self.lambda2))
        object.__setattr__(self, "x_i", Fraction(self.x_i))
        object.__setattr__(self, "x_pq", Fraction(self.x_pq))
        if self.lambda1 == self.lambda2 or self.lambda1 == 0 or self.lambda2 == 0:
            raise DegenerateLambdasError("lambda parameters must be distinct and nonzero")

    def quartic(self, mu: Scalar) -> Poly:
        const = -Fraction(mu) * self.x_i if self.with_e_block else Fraction(0)
        return Poly.from_coeffs(
            [
                const,
                -Fraction(mu) * self.x_pq,
                self.lambda1 * self.lambda2,
                -(self.lambda1 + self.lambda2),
                1,
            ]
        )


def quartic_discriminant_check(inst: DiscriminantInstance) -> ResultantCoefficientReport:
    """Expand the 7x7 discriminant determinant of the perturbed quartic in mu
    and compare against its closed forms.

    The determinant is degree 4 in mu with zero constant term; its mu
    coefficient is 4 lambda1^3 lambda2^3 (lambda1-lambda2)^2 x_i and its mu^4
    coefficient is -27 x_pq^4.
    """
    samples = []
    for mu_val in range(5):
        q = inst.quartic(mu_val)
        samples.append((Fraction(mu_val), det(sylvester_matrix(q, q.derivative()))))
    poly = interpolate(samples, 4)
    eff_x_i = inst.x_i if inst.with_e_block else Fraction(0)
    expected_mu = (
        4 * inst.lambda1**3 * inst.lambda2**3 * (inst.lambda1 - inst.lambda2) ** 2 * eff_x_i
    )
    expected_mu4 = -27 * inst.x_pq**4
    comparisons = (
        CoefficientComparison("constant", Fraction(0), poly.coeff(0)),
        CoefficientComparison("mu", expected_mu, poly.coeff(1)),
        CoefficientComparison("mu^4", expected_mu4, poly.coeff(4)),
    )
    return ResultantCoefficientReport(poly, comparisons)


def bordered_matrix(inst: BorderedInstance, mu: Scalar) -> Matrix:
    """The bordered witness matrix for this instance at the given mu."""
    from .spaces import bordered_witness

    return bordered_witness(inst.n, inst.k, inst.lambdas, inst.b, inst.c, mu)
