"""Tests for exact polynomials, expression parsing and rational functions."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gfkit.domain.errors import ComputationError, InputFormatError, NotInvertibleError
from gfkit.domain.expressions import parse_fraction, parse_polynomial, parse_rational
from gfkit.domain.polynomials import MPoly, UPolyT
from gfkit.domain.ratfun import RatFun, ratfun_expand

small_ints = st.integers(min_value=-6, max_value=6)
upolys = st.lists(small_ints, min_size=1, max_size=5).map(UPolyT)


# ---------------------------------------------------------------------------
# MPoly
# ---------------------------------------------------------------------------
class TestMPoly:
    def test_printed_highest_term_first(self):
        p = parse_polynomial("1 - 5*t + 7*t^2 - 4*t^3")
        assert str(p) == "-4*t^3 + 7*t^2 - 5*t + 1"

    def test_zero_terms_are_dropped(self):
        p = MPoly.var("t") - MPoly.var("t")
        assert p.is_zero
        assert str(p) == "0"

    def test_constructor_merges_reordered_monomials(self):
        p = MPoly({(("a", 1), ("t", 2)): 1, (("t", 2), ("a", 1)): 2, (("x", 0), ("t", 1)): 3})
        assert p == 3 * MPoly.var("a") * MPoly.var("t", 2) + 3 * MPoly.var("t")
        assert len(p.terms) == 2

    def test_constructor_cancels_opposite_terms(self):
        assert MPoly({(("t", 1),): 1, (("t", 1), ("x", 0)): -1}).is_zero

    def test_product_matches_expansion(self):
        x, t = MPoly.var("x"), MPoly.var("t")
        assert (1 - t) * (1 + x * t) == parse_polynomial("1 + x*t - t - x*t^2")

    def test_degree_and_coefficient(self):
        p = parse_polynomial("27*t^2*a^2 + (1 - 18*t)*a - 1 + 16*t")
        assert p.degree("a") == 2
        assert p.degree("t") == 2
        assert p.coefficient("a", 1) == parse_polynomial("1 - 18*t")
        assert p.coefficient("a", 0) == parse_polynomial("16*t - 1")

    def test_exact_div(self):
        p = parse_polynomial("(1 - t)^2*(1 + x)")
        assert p.exact_div(parse_polynomial("1 - t")) == parse_polynomial("(1 - t)*(1 + x)")

    def test_exact_div_rejects_remainder(self):
        with pytest.raises(ComputationError):
            parse_polynomial("1 + t").exact_div(parse_polynomial("1 - t"))

    def test_evaluate_substitutes_polynomials(self):
        p = parse_polynomial("a^2 - a")
        assert p.evaluate({"a": parse_polynomial("1 + t")}) == parse_polynomial("t + t^2")

    def test_derivative(self):
        assert parse_polynomial("a^3*t + 2*a").derivative("a") == parse_polynomial("3*a^2*t + 2")

    @given(st.lists(small_ints, min_size=1, max_size=4), st.lists(small_ints, min_size=1, max_size=4))
    def test_multiplication_commutes(self, a, b):
        p = UPolyT(a).to_mpoly("x") + MPoly.var("t")
        q = UPolyT(b).to_mpoly("t")
        assert p * q == q * p


# ---------------------------------------------------------------------------
# UPolyT
# ---------------------------------------------------------------------------
class TestUPolyT:
    def test_divmod(self):
        q, r = UPolyT([1, 0, 1]).divmod(UPolyT([1, 1]))
        assert q == UPolyT([-1, 1])
        assert r == UPolyT([2])

    def test_gcd_is_monic(self):
        a = UPolyT([1, -1]) * UPolyT([2, 3])
        b = UPolyT([1, -1]) * UPolyT([5, 1])
        assert a.gcd(b) == UPolyT([-1, 1])

    def test_squarefree_decomposition(self):
        p = UPolyT([1, -1]) ** 2 * UPolyT([1, 1])
        factors = dict((m, f) for f, m in p.squarefree_decomposition())
        assert factors[1] == UPolyT([1, 1])
        assert factors[2] == UPolyT([-1, 1])

    def test_division_by_zero(self):
        with pytest.raises(NotInvertibleError):
            UPolyT([1, 1]).divmod(UPolyT([]))

    def test_call_evaluates(self):
        assert UPolyT([1, -5, 7, -4])(Fraction(1)) == -1

    @given(upolys, upolys)
    @settings(max_examples=50)
    def test_divmod_identity(self, a, b):
        if b.is_zero:
            return
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.is_zero or r.degree < b.degree


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------
class TestParsing:
    def test_caret_is_power(self):
        assert parse_polynomial("t^3") == MPoly.var("t", 3)

    def test_rational_coefficients(self):
        assert parse_polynomial("t/2 + 1/3") == MPoly.var("t") * Fraction(1, 2) + Fraction(1, 3)

    def test_decimal_rejected_with_column(self):
        with pytest.raises(InputFormatError) as info:
            parse_polynomial("1 + 0.5*t", source="expr")
        assert info.value.column == 5
        assert str(info.value).startswith("expr:1:5:")

    def test_unbalanced_parenthesis(self):
        with pytest.raises(InputFormatError):
            parse_polynomial("(1 + t")

    def test_not_a_polynomial(self):
        with pytest.raises(InputFormatError):
            parse_polynomial("1/(1 - t)")

    def test_fraction_split(self):
        num, den = parse_fraction("t/(1 - t)")
        assert RatFun.from_mpolys(num, den) == RatFun.parse("t/(1 - t)")

    def test_parse_rational(self):
        assert parse_rational("-3/4") == Fraction(-3, 4)
        with pytest.raises(InputFormatError):
            parse_rational("three")


# ---------------------------------------------------------------------------
# RatFun
# ---------------------------------------------------------------------------
class TestRatFun:
    def test_reduced_with_unit_constant_term(self):
        f = RatFun.parse("(1 - t^2)/(2 - 2*t)")
        assert f.num == UPolyT([Fraction(1, 2), Fraction(1, 2)])
        assert f.den == UPolyT([1])

    def test_equality_is_exact(self):
        assert RatFun.parse("1/(1 - t)") == RatFun.parse("(1 + t)/(1 - t^2)")
        assert RatFun.parse("1/(1 - t)") != RatFun.parse("1/(1 + t)")

    def test_string_form(self):
        assert str(RatFun.parse("1/(1 - 2*t)")) == "1/(-2*t + 1)"

    def test_expansion(self):
        f = RatFun.parse("t*(1 - t)^3/(1 - 5*t + 7*t^2 - 4*t^3)")
        assert ratfun_expand(f, 10).coeffs == (0, 1, 2, 6, 19, 61, 196, 629, 2017, 6466, 20727)

    def test_expansion_with_parameters(self):
        f = RatFun.parse("1/(1 - x*t)")
        assert ratfun_expand(f, 3)[3] == MPoly.var("x", 3)

    def test_pole_at_zero(self):
        with pytest.raises(NotInvertibleError):
            ratfun_expand(RatFun.parse("1/t"), 4)

    def test_arithmetic(self):
        f = RatFun.parse("1/(1 - t)")
        assert f * RatFun.parse("1 - t") == 1
        assert f - 1 == RatFun.parse("t/(1 - t)")

    def test_to_dict(self):
        d = RatFun.parse("t/(1 - t)").to_dict()
        assert d == {"numerator": "t", "denominator": "-t + 1"}
