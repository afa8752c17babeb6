from __future__ import annotations

import json
from fractions import Fraction

import pytest

from eigenbound.matrices import Matrix
from eigenbound.sampling import random_matrix
from eigenbound.serialize import (
    dumps_canonical,
    format_rational,
    matrix_from_obj,
    matrix_to_obj,
    parse_rational,
    subspace_from_obj,
    subspace_to_obj,
)
from eigenbound.spaces import extremal_space


class TestRationalFormat:
    def test_integers_drop_denominator(self):
        assert format_rational(Fraction(3)) == "3"
        assert format_rational(Fraction(-7)) == "-7"
        assert format_rational(Fraction(0)) == "0"

    def test_fractions_keep_it(self):
        assert format_rational(Fraction(3, 4)) == "3/4"
        assert format_rational(Fraction(-3, 4)) == "-3/4"

    def test_round_trip(self):
        for s in ("3", "-7", "3/4", "-12/5", "0"):
            assert format_rational(parse_rational(s)) == s


class TestMatrixJson:
    def test_shape_and_strings(self):
        m = Matrix.from_rows([[Fraction(1, 2), 2], [3, Fraction(-5, 7)]])
        obj = matrix_to_obj(m)
        assert obj == {"rows": 2, "cols": 2, "entries": [["1/2", "2"], ["3", "-5/7"]]}
        assert matrix_from_obj(obj) == m

    def test_round_trip_random(self, rng):
        m = random_matrix(rng, 3, 5)
        assert matrix_from_obj(json.loads(dumps_canonical(matrix_to_obj(m)))) == m

    def test_bad_shape_rejected(self):
        with pytest.raises(ValueError):
            matrix_from_obj({"rows": 2, "cols": 2, "entries": [["1", "2"]]})


class TestSubspaceJson:
    def test_round_trip_is_canonical(self):
        v = extremal_space(4, 3, 1)
        again = subspace_from_obj(subspace_to_obj(v))
        assert again == v
        assert dumps_canonical(subspace_to_obj(again)) == dumps_canonical(subspace_to_obj(v))

    def test_zero_subspace(self):
        obj = {"n": 3, "basis": []}
        assert subspace_from_obj(obj).dim == 0
