"""Tests for catalytic equations solved by t-adic iteration."""

from __future__ import annotations

from math import comb

import pytest

from gfkit.application.fixtures import get_fixture
from gfkit.domain.catalytic import CatalyticEquation, solve_catalytic
from gfkit.domain.errors import ComputationError, ImproperSystemError
from gfkit.domain.expressions import parse_polynomial
from gfkit.domain.systems import PolySystem, canonical_solution


def maps_count(n: int) -> int:
    return 2 * 3 ** n * comb(2 * n, n) // ((n + 1) * (n + 2))


class TestParse:
    def test_lhs_is_optional(self):
        with_lhs = CatalyticEquation.parse("G(u) = 1 + t*u*G(u)^2")
        bare = CatalyticEquation.parse("1 + t*u*G^2")
        assert with_lhs == bare

    def test_seed(self):
        eq = CatalyticEquation.parse("G(u) = 1 + u + t*G")
        assert eq.seed == parse_polynomial("1 + u")

    def test_unknown_name(self):
        with pytest.raises(ComputationError):
            CatalyticEquation.parse("G(u) = 1 + t*z*G")

    def test_series_term_without_t(self):
        """A G term with no factor t would not contract."""
        with pytest.raises(ImproperSystemError):
            CatalyticEquation.parse("G(u) = 1 + u*G(u)")

    def test_str(self):
        assert str(CatalyticEquation.parse("G = 1 + t*G1")).startswith("G(u) = ")


class TestSolve:
    def test_first_layer_of_maps(self):
        _, g = solve_catalytic(get_fixture("maps_catalytic", "catalytic"), 1)
        assert g[1] == parse_polynomial("u^2 + u")

    def test_maps_at_u_equal_one(self):
        g1, _ = solve_catalytic(get_fixture("maps_catalytic", "catalytic"), 7)
        assert g1.scalars() == [maps_count(n) for n in range(8)]

    def test_without_catalytic_variable(self):
        g1, g = solve_catalytic(CatalyticEquation.parse("G(u) = 1 + t*G(u)^2"), 10)
        (a,) = canonical_solution(PolySystem.of([("A", parse_polynomial("t*(1 + A)^2"))]), 10)
        assert g1 == 1 + a
        assert g == g1

    def test_dyck_prefixes_by_final_height(self):
        g1, g = solve_catalytic(CatalyticEquation.parse("G(u) = 1 + t*u*DD"), 5)
        assert g[2] == parse_polynomial("u^2 + u")
        assert g1.scalars() == [1, 1, 2, 5, 14, 42]

    def test_negative_order(self):
        with pytest.raises(ComputationError):
            solve_catalytic(CatalyticEquation.parse("G = 1 + t*G"), -1)
