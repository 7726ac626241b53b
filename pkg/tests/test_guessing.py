"""Tests for rational and algebraic guessing."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gfkit.application.fixtures import HARD_PARTICLES, get_fixture
from gfkit.domain.branches import lift_branch, series_roots, verify_algebraic
from gfkit.domain.errors import InsufficientDataError, ReconstructionError
from gfkit.domain.expressions import parse_polynomial
from gfkit.domain.guessing import GuessResult, guess_algebraic, guess_rational, normalize_relation, pade_fit
from gfkit.domain.polynomials import MPoly, UPolyT
from gfkit.domain.ratfun import RatFun, ratfun_expand

CC = [0, 1, 2, 6, 19, 61, 196, 629, 2017, 6466, 20727]


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


ratfuns = st.tuples(
    st.lists(st.integers(min_value=-5, max_value=5), min_size=1, max_size=4),
    st.lists(st.integers(min_value=-5, max_value=5), max_size=3),
).map(lambda nd: RatFun(UPolyT(nd[0]), UPolyT([1, *nd[1]])))


@st.composite
def quadratics(draw) -> MPoly:
    """k (a - r)(a - s) + t (u + v a + w a^2) with r != s, so a(0) = r and a(0) = s are simple."""
    small = st.integers(min_value=-3, max_value=3)
    k = draw(small.filter(bool))
    r = draw(small)
    s = draw(small.filter(lambda x: x != r))
    u, v, w = draw(small), draw(small), draw(small)
    a, t = MPoly.var("a"), MPoly.var("t")
    return k * (a - r) * (a - s) + t * (u + v * a + w * a * a)


# ---------------------------------------------------------------------------
# Rational
# ---------------------------------------------------------------------------
class TestGuessRational:
    def test_column_convex(self):
        result = guess_rational(CC, 4, 4)
        assert result is not None
        assert result.relation == get_fixture("column_convex", "ratfun")
        assert result.degrees == (4, 3)
        assert result.used == 8
        assert result.validated == 3

    def test_smallest_pair_wins(self):
        result = guess_rational([1] * 10, 3, 3)
        assert result.relation == RatFun.parse("1/(1 - t)")
        assert result.degrees == (0, 1)

    def test_no_fit_in_grid(self):
        assert guess_rational([catalan(n) for n in range(12)], 2, 2) is None

    def test_too_few_coefficients(self):
        with pytest.raises(InsufficientDataError):
            guess_rational([1, 2, 3], 4, 4)

    def test_four_coefficients_admit_constants(self):
        result = guess_rational([5, 0, 0, 0], 4, 4)
        assert result.relation == RatFun.parse("5")

    @given(ratfuns)
    @settings(max_examples=50, deadline=None)
    def test_recovers_small_rational_functions(self, f):
        result = guess_rational(ratfun_expand(f, 29).scalars(), 3, 3)
        assert result is not None
        assert result.relation == f


class TestPadeFit:
    def test_exact_fit(self):
        coeffs = ratfun_expand(RatFun.parse("(1 + t)/(1 - 2*t)"), 8).scalars()
        assert pade_fit(coeffs, 1, 1) == RatFun.parse("(1 + t)/(1 - 2*t)")

    def test_degrees_too_small(self):
        coeffs = ratfun_expand(RatFun.parse("1/(1 - t - t^2)"), 8).scalars()
        assert pade_fit(coeffs, 0, 1) is None


# ---------------------------------------------------------------------------
# Algebraic
# ---------------------------------------------------------------------------
class TestGuessAlgebraic:
    def test_catalan(self):
        coeffs = [0] + [catalan(n) for n in range(7)]
        result = guess_algebraic(coeffs, 1, 2)
        assert result.relation == parse_polynomial("a^2 - a + t")
        assert result.kind == "algebraic"

    def test_rational_series_found_at_degree_one(self):
        result = guess_algebraic([2 ** n for n in range(6)], 1, 1)
        assert result.relation == -parse_polynomial("(1 - 2*t)*a - 1")

    def test_hard_particles(self):
        p = get_fixture("hard_particles", "equation")
        coeffs = lift_branch(p, Fraction(0), 11).scalars()
        result = guess_algebraic(coeffs, 1, 4)
        assert result.relation == -parse_polynomial(HARD_PARTICLES)
        assert result.validated == 3

    def test_too_few_coefficients(self):
        with pytest.raises(InsufficientDataError):
            guess_algebraic([0, 1, 1, 2, 5, 14, 42], 1, 2)

    def test_no_relation(self):
        assert guess_algebraic([factorial(n) for n in range(10)], 1, 1) is None

    @given(quadratics())
    @settings(max_examples=10, deadline=None)
    def test_branches_of_random_quadratics_roundtrip(self, p):
        window = 12
        for branch in series_roots(p, window - 1).branches:
            result = guess_algebraic(branch.series.scalars(), 1, 2)
            assert result is not None
            longer = series_roots(p, 3 * window - 1).branches
            lifted = next(b.series for b in longer if b.constant_term == branch.constant_term)
            assert verify_algebraic(lifted, result.relation) == 3 * window - 1


class TestNormalization:
    def test_primitive_and_positive(self):
        p = parse_polynomial("-2/3*a^2 + 4/3*a - 2*t")
        assert normalize_relation(p) == parse_polynomial("a^2 - 2*a + 3*t")

    def test_result_needs_validation(self):
        with pytest.raises(ReconstructionError):
            GuessResult("rational", RatFun.parse("1"), 1, 2, (0, 0))

    def test_to_dict(self):
        d = guess_rational([1] * 6, 1, 1).to_dict()
        assert d["kind"] == "rational"
        assert d["degrees"] == [0, 1]
        assert d["validated"] == 4
