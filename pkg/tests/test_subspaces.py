from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest

from eigenbound.errors import (
    EmptyAmbientError,
    NotBorelInvariantError,
    SingularMatrixError,
    SizeMismatchError,
)
from eigenbound.matrices import Matrix, inverse
from eigenbound.sampling import (
    random_invertible,
    random_member,
    random_rational,
)
from eigenbound.spaces import corner_form_space, extremal_space
from eigenbound.spectral import count_distinct_eigenvalues
from eigenbound.subspaces import (
    MatrixSubspace,
    canonicalize,
    check_unit_implications,
    conjugate,
    is_borel_invariant,
    restrict_to_zero,
    sum_and_intersection,
)


def unit(n, i, j):
    return Matrix.unit(n, i, j)


class TestCanonicalize:
    def test_dependent_generators_collapse(self):
        v = canonicalize([unit(2, 0, 1), unit(2, 0, 1).scale(2)])
        assert v.dim == 1

    def test_empty_needs_ambient(self):
        assert canonicalize([], n=3).dim == 0
        with pytest.raises(EmptyAmbientError):
            canonicalize([])

    def test_mixed_sizes_rejected(self):
        with pytest.raises(SizeMismatchError):
            canonicalize([Matrix.zeros(2), Matrix.zeros(3)])

    def test_idempotent_on_extremal_basis(self):
        v = extremal_space(4, 3, 1)
        again = canonicalize(list(v.basis))
        assert again == v and again.vectors() == v.vectors()

    def test_random_bases_of_same_space_agree(self, rng):
        v = extremal_space(4, 2, 1)
        for _ in range(5):
            p = [
                [random_rational(rng) for _ in range(v.dim)] for _ in range(v.dim)
            ]
            mats = []
            for row in p:
                acc = Matrix.zeros(4)
                for c, b in zip(row, v.basis):
                    acc = acc + b.scale(c)
                mats.append(acc)
            w = canonicalize(mats)
            if w.dim == v.dim:  # random recombination may lose rank
                assert w == v


class TestContains:
    def test_free_block_unit(self):
        v = extremal_space(4, 3, 1)
        assert v.contains(unit(4, 0, 1))

    def test_zero_block_unit(self):
        v = extremal_space(4, 3, 1)
        assert not v.contains(unit(4, 1, 0))

    def test_zero_matrix(self):
        assert MatrixSubspace.zero(3).contains(Matrix.zeros(3))

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            MatrixSubspace.zero(3).contains(Matrix.zeros(2))

    def test_coordinates_reconstruct(self, rng):
        v = extremal_space(5, 3, 1)
        m = random_member(v, rng)
        coords = v.coordinates(m)
        assert coords is not None
        acc = Matrix.zeros(5)
        for c, b in zip(coords, v.basis):
            acc = acc + b.scale(c)
        assert acc == m
        assert v.coordinates(unit(5, 4, 0)) is None


class TestSumAndIntersection:
    def test_self(self):
        v = extremal_space(4, 3, 0)
        total, meet = sum_and_intersection(v, v)
        assert total == v and meet == v

    def test_disjoint_diagonals(self):
        a = canonicalize([unit(2, 0, 0)])
        b = canonicalize([unit(2, 1, 1)])
        total, meet = sum_and_intersection(a, b)
        assert total.dim == 2 and meet.dim == 0

    def test_grassmann_identity(self, rng):
        for _ in range(10):
            n = 3
            a = canonicalize([random_member_of_full(rng, n) for _ in range(rng.randint(1, 5))], n)
            b = canonicalize([random_member_of_full(rng, n) for _ in range(rng.randint(1, 5))], n)
            total, meet = sum_and_intersection(a, b)
            assert a.dim + b.dim == total.dim + meet.dim

    def test_corner_form_intersection_dimension(self):
        # dim(V0(0) cap Vinf(0)) = C(n-1,2) + C(k-1,2) + 2 - (p-q)(k-2) when
        # the corner forms use parameters p > q
        for (n, k, p, q) in [(5, 3, 2, 1), (6, 3, 2, 0), (6, 4, 2, 1), (7, 4, 3, 1)]:
            v0 = corner_form_space(n, k, p)
            vinf = corner_form_space(n, k, q)
            meet = sum_and_intersection(v0, vinf)[1]
            zero_comps = [
                restrict_to_zero(
                    s,
                    [(0, c) for c in range(1, n)] + [(r, 0) for r in range(1, n)],
                )
                for s in (v0, vinf)
            ]
            inner = sum_and_intersection(zero_comps[0], zero_comps[1])[1]
            expected = comb(n - 1, 2) + comb(k - 1, 2) + 2 - (p - q) * (k - 2)
            assert inner.dim == expected, (n, k, p, q, inner.dim)
            assert meet.dim >= inner.dim


def random_member_of_full(rng, n):
    return Matrix(n, n, tuple(random_rational(rng, 5) for _ in range(n * n)))


class TestConjugate:
    def test_identity(self):
        v = extremal_space(4, 3, 1)
        assert conjugate(v, Matrix.identity(4)) == v

    def test_unipotent_fixes_e12(self):
        v = canonicalize([unit(2, 0, 1)])
        p = Matrix.from_rows([[1, 1], [0, 1]])
        assert conjugate(v, p) == v

    def test_round_trip(self, rng):
        v = extremal_space(4, 2, 2)
        p = random_invertible(rng, 4, bound=5)
        assert conjugate(conjugate(v, p), inverse(p)) == v

    def test_dimension_preserved(self, rng):
        v = extremal_space(5, 3, 0)
        p = random_invertible(rng, 5, bound=5)
        assert conjugate(v, p).dim == v.dim

    def test_singular_rejected(self):
        with pytest.raises(SingularMatrixError):
            conjugate(MatrixSubspace.zero(2), Matrix.zeros(2))

    def test_budget_preserved_under_conjugation(self, rng):
        v = extremal_space(4, 3, 1)
        p = random_invertible(rng, 4, bound=5)
        w = conjugate(v, p)
        for _ in range(50):
            assert count_distinct_eigenvalues(random_member(w, rng)) <= 3


class TestBorelInvariance:
    def test_extremal_spaces(self):
        for (n, k, p) in [(4, 3, 1), (5, 3, 0), (5, 4, 2), (6, 2, 3)]:
            assert is_borel_invariant(extremal_space(n, k, p))

    def test_lower_unit_not_invariant(self):
        assert not is_borel_invariant(canonicalize([unit(2, 1, 0)]))

    def test_upper_unit_invariant(self):
        assert is_borel_invariant(canonicalize([unit(2, 0, 1)]))

    def test_full_upper_triangular(self):
        gens = [unit(3, i, j) for i in range(3) for j in range(i, 3)]
        assert is_borel_invariant(canonicalize(gens))

    def test_diagonal_space_not_invariant(self):
        # diagonal matrices are torus-stable but not unipotent-stable
        gens = [unit(3, i, i) for i in range(3)]
        assert not is_borel_invariant(canonicalize(gens))


class TestUnitImplications:
    def test_extremal_spaces_clean(self):
        assert check_unit_implications(extremal_space(5, 3, 1)) == []

    def test_full_upper_triangular_clean(self):
        gens = [unit(3, i, j) for i in range(3) for j in range(i, 3)]
        assert check_unit_implications(canonicalize(gens)) == []

    def test_precondition(self):
        with pytest.raises(NotBorelInvariantError):
            check_unit_implications(canonicalize([unit(2, 1, 0)]))

    def test_entry_patterns_that_break_invariance(self):
        # a mixed generator whose unit pieces are missing cannot be invariant:
        # the torus split of the generator leaves the space
        space = canonicalize([Matrix.identity(2) + unit(2, 0, 1)])
        assert not is_borel_invariant(space)
        wide = canonicalize([unit(3, 0, 1) + unit(3, 0, 2)])
        assert not is_borel_invariant(wide)


class TestRestrictToZero:
    def test_kills_coordinates(self):
        v = extremal_space(4, 3, 1)
        w = restrict_to_zero(v, [(0, 1), (0, 2)])
        assert w.dim == v.dim - 2
        for b in w.basis:
            assert b[0, 1] == 0 and b[0, 2] == 0

    def test_no_coords_is_identity(self):
        v = extremal_space(4, 2, 1)
        assert restrict_to_zero(v, []) == v
