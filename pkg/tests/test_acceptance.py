"""Acceptance suite.

One test per criterion, each run at its full stated range with exact (zero
tolerance) comparisons and a fixed seed.  Every test prints one
"[acceptance] ..." line; run with `pytest -s tests/test_acceptance.py -v`
to see them live.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from math import comb
from random import Random

from eigenbound.degeneration import (
    border_profile,
    component_dims,
    corner_weights,
    grassmannian_limit,
    one_param_family,
    weight_decomposition,
)
from eigenbound.identities import (
    BorderedInstance,
    DiscriminantInstance,
    bordered_matrix,
    closed_form_char_poly,
    quartic_discriminant_check,
    two_zeros_resultant_check,
)
from eigenbound.matrices import Matrix
from eigenbound.polynomials import char_poly
from eigenbound.sampling import (
    distinct_nonzero_rationals,
    distinct_rationals,
    random_invertible_upper,
    random_matrix,
    random_member,
    random_rational,
)
from eigenbound.spaces import enumerate_configs, extremal_space, max_dimension
from eigenbound.spectral import (
    count_distinct_by_sylvester_rank,
    count_distinct_eigenvalues,
    is_regular,
    minimal_polynomial_degree,
)
from eigenbound.subspaces import check_unit_implications, conjugate, is_borel_invariant


@contextmanager
def criterion(number: int, title: str):
    start = time.monotonic()
    try:
        yield
    except BaseException:
        print(f"[acceptance] {number:2d} {title}: FAIL ({time.monotonic() - start:.1f}s)")
        raise
    print(f"[acceptance] {number:2d} {title}: PASS ({time.monotonic() - start:.1f}s)")


def cells(n_lo: int, n_hi: int):
    for n in range(n_lo, n_hi + 1):
        for k in range(1, n):
            for p in range(0, n - k + 2):
                yield n, k, p


def random_bordered(rng: Random, n: int, k: int) -> BorderedInstance:
    return BorderedInstance(
        n,
        k,
        tuple(distinct_rationals(rng, k)),
        tuple(random_rational(rng) for _ in range(n - k + 1)),
        tuple(random_rational(rng) for _ in range(n - 1)),
    )


def test_criterion_01_dimension_formula():
    with criterion(1, "dimension formula for all extremal spaces, n 4..8"):
        for n, k, p in cells(4, 8):
            assert extremal_space(n, k, p).dim == comb(n, 2) + comb(k, 2) + 1


def test_criterion_02_eigenvalue_budget():
    with criterion(2, "100 sampled members per space stay within the budget"):
        rng = Random(0)
        for n, k, p in cells(4, 8):
            v = extremal_space(n, k, p)
            for _ in range(100):
                assert count_distinct_eigenvalues(random_member(v, rng)) <= k


def test_criterion_03_combinatorial_bound():
    with criterion(3, "configuration maximum and maximizers, n up to 12"):
        for n in range(2, 13):
            for k in range(1, n):
                best, argmax = enumerate_configs(n, k)
                assert best == comb(n, 2) + comb(k, 2) + 1
                shapes = [(c.l, c.parts) for c in argmax]
                if k >= 3:
                    assert shapes == [(1, (k - 1,))]
                elif k == 2:
                    assert shapes == [(1, (1,)), (2, ())]


def test_criterion_04_char_poly_closed_form():
    with criterion(4, "closed-form bordered char poly, 25 draws per (n,k)"):
        rng = Random(0)
        for n in range(4, 8):
            for k in range(3, n):
                for _ in range(25):
                    inst = random_bordered(rng, n, k)
                    mu = random_rational(rng)
                    closed = closed_form_char_poly(inst, mu)
                    direct = char_poly(bordered_matrix(inst, mu)) * ((-1) ** n)
                    assert closed == direct


def test_criterion_05_resultant_coefficients():
    with criterion(5, "collapse resultant coefficients, 25 draws per gap"):
        rng = Random(0)
        for gap in (1, 2, 3, 4):
            for _ in range(25):
                k = rng.choice((3, 4, 5))
                report = two_zeros_resultant_check(random_bordered(rng, k + gap, k))
                assert report.ok, (gap, k, report)


def test_criterion_06_discriminant_coefficients():
    with criterion(6, "quartic discriminant coefficients, both variants"):
        rng = Random(0)
        for with_block in (True, False):
            for _ in range(25):
                lams = distinct_nonzero_rationals(rng, 2)
                inst = DiscriminantInstance(
                    lams[0], lams[1], random_rational(rng), random_rational(rng), with_block
                )
                assert quartic_discriminant_check(inst).ok


def test_criterion_07_degeneration_suite():
    with criterion(7, "limits of triangular conjugates, n up to 6"):
        rng = Random(0)
        for n, k, p in cells(2, 6):
            v = extremal_space(n, k, p)
            w = corner_weights(n)
            for _ in range(10):
                u = random_invertible_upper(rng, n)
                moved = conjugate(v, u)
                limit = grassmannian_limit(one_param_family(moved, w))
                assert limit.dim == moved.dim
                assert grassmannian_limit(one_param_family(limit, w)) == limit
                dims = component_dims(weight_decomposition(limit, w))
                assert set(dims) <= {-n, 0, n}
                if k >= 3:
                    prof = border_profile(limit, k)
                    assert prof.row_primed_dim + prof.col_primed_dim <= n - k + 1
                    assert prof.row_dim + prof.col_dim <= n + k - 3
                for _ in range(50):
                    assert count_distinct_eigenvalues(random_member(limit, rng)) <= k


def test_criterion_08_spectral_oracles():
    with criterion(8, "regularity and distinct-count oracle agreement"):
        rng = Random(0)
        for _ in range(200):
            n = rng.randint(1, 5)
            a = random_matrix(rng, n, bound=10)
            assert is_regular(a) == (minimal_polynomial_degree(a) == n)
        for _ in range(200):
            n = rng.randint(2, 6)
            a = random_matrix(rng, n, bound=10)
            assert count_distinct_eigenvalues(a) == count_distinct_by_sylvester_rank(a)


def test_criterion_09_maximality_probe():
    with criterion(9, "augmented spaces leave the budget, n up to 6, k = 3"):
        rng = Random(0)
        k = 3
        for n in range(4, 7):
            for p in range(0, n - k + 2):
                v = extremal_space(n, k, p)
                for i in range(n):
                    for j in range(n):
                        unit = Matrix.unit(n, i, j)
                        if v.contains(unit):
                            continue
                        found = False
                        for _ in range(1000):
                            m = random_member(v, rng) + unit.scale(random_rational(rng))
                            if count_distinct_eigenvalues(m) >= k + 1:
                                found = True
                                break
                        assert found, (n, k, p, i, j)


def test_criterion_10_borel_invariance():
    with criterion(10, "Borel invariance and forced units, n up to 8"):
        for n, k, p in cells(2, 8):
            v = extremal_space(n, k, p)
            assert is_borel_invariant(v)
            assert check_unit_implications(v) == []
