"""Tests for slices and diagonals of bivariate rational functions."""

from __future__ import annotations

from math import comb

import pytest

from gfkit.domain.errors import ComputationError
from gfkit.domain.laurent import BiRatFun, laurent_slice


class TestBiRatFun:
    def test_xy_substitution(self):
        f = BiRatFun.parse("1/(1 - x - y)", variables="xy")
        rows = f.expand(2)
        assert rows[0] == {0: 1}
        assert rows[1] == {1: 1, -1: 1}
        assert rows[2] == {2: 1, 0: 2, -2: 1}

    def test_denominator_head_must_be_monomial(self):
        with pytest.raises(ComputationError):
            BiRatFun.parse("1/(1 - s - t)")

    def test_extra_variables(self):
        with pytest.raises(ComputationError):
            BiRatFun.parse("x/(1 - t)")

    def test_unknown_variable_pair(self):
        with pytest.raises(ComputationError):
            BiRatFun.parse("1/(1 - t)", variables="uv")


class TestSlices:
    def test_constant_slice_of_symmetric_walks(self):
        f = BiRatFun.parse("1/(1 - t*(s + 1/s))")
        assert laurent_slice(f, 0, 6).scalars() == [1, 0, 2, 0, 6, 0, 20]

    def test_shifted_slice(self):
        f = BiRatFun.parse("1/(1 - t*(s + 1/s))")
        assert laurent_slice(f, 1, 5).scalars() == [0, 1, 0, 3, 0, 10]

    def test_diagonal_central_binomials(self):
        f = BiRatFun.parse("1/(1 - x - y)", variables="xy")
        assert laurent_slice(f, 0, 8, mode="diagonal").scalars() == [comb(2 * n, n) for n in range(9)]

    def test_diagonal_of_product(self):
        f = BiRatFun.parse("1/((1 - x)*(1 - y))", variables="xy")
        assert laurent_slice(f, 0, 6, mode="diagonal").scalars() == [1] * 7

    def test_odd_diagonal_coefficient(self):
        with pytest.raises(ComputationError):
            laurent_slice(BiRatFun.parse("t"), 0, 3, mode="diagonal")

    def test_unknown_mode(self):
        with pytest.raises(ComputationError):
            laurent_slice(BiRatFun.parse("t"), 0, 3, mode="anti")
