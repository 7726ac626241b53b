"""The corpus suite registry.

Every suite pairs an engine computation with an independent witness from
``oracles`` (or a closed form) and returns a list of checks. Bounds depend
on the scale; ``Scale.DEFAULT`` uses the full bounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

import mpmath

from gfkit.application.corpus import oracles
from gfkit.application.fixtures import (
    COLUMN_CONVEX,
    PLANAR_MAPS,
    MAPS_CATALYTIC,
    THREE_CONNECTED,
    TRIANGULATIONS,
    column_convex_automaton,
    get_fixture,
)
from gfkit.domain.automata import automaton_gf
from gfkit.domain.branches import series_roots
from gfkit.domain.catalytic import CatalyticEquation, solve_catalytic
from gfkit.domain.errors import UsageError
from gfkit.domain.expressions import parse_polynomial
from gfkit.domain.guessing import guess_rational
from gfkit.domain.polynomials import MPoly, UPolyT, to_mpoly
from gfkit.domain.ratfun import RatFun, ratfun_expand
from gfkit.domain.rational_analysis import growth_ratio, rational_asymptotics
from gfkit.domain.reports import Check, Scale, SuiteReport
from gfkit.domain.series import TSeries, fixed_point
from gfkit.domain.systems import PolySystem, canonical_solution

SuiteFn = Callable[[Scale], list[Check]]
SHOWN_CHARS = 160

SUITES: dict[str, SuiteFn] = {}


def _suite(name: str) -> Callable[[SuiteFn], SuiteFn]:
    def register(fn: SuiteFn) -> SuiteFn:
        SUITES[name] = fn
        return fn

    return register


def _bound(scale: Scale, default: int, small: int) -> int:
    return small if scale is Scale.SMALL else default


# ---------------------------------------------------------------------------
# Check builders
# ---------------------------------------------------------------------------
def _show(values: Sequence[object]) -> str:
    text = ", ".join(str(v) for v in values)
    return text if len(text) <= SHOWN_CHARS else f"[{len(values)} values]"


def _sequence_check(description: str, expected: Sequence[object], computed: Sequence[object]) -> Check:
    expected, computed = list(expected), list(computed)
    if expected == computed:
        return Check(description, _show(expected), _show(computed), True)
    if len(expected) != len(computed):
        return Check(description, _show(expected), f"{len(computed)} values instead of {len(expected)}", False)
    k = next(i for i, (e, c) in enumerate(zip(expected, computed)) if e != c)
    return Check(description, _show(expected), f"differs at index {k}: {computed[k]} (expected {expected[k]})", False)


def _value_check(description: str, expected: object, computed: object) -> Check:
    return Check(description, str(expected), str(computed), expected == computed)


def _close_check(description: str, expected, computed, tolerance: float) -> Check:
    ok = abs(expected - computed) <= tolerance
    return Check(
        f"{description} (tolerance {tolerance:g})",
        mpmath.nstr(expected, 12),
        mpmath.nstr(computed, 12),
        bool(ok),
    )


def _poly_layers(series: TSeries, n: int) -> list[MPoly]:
    return [to_mpoly(series[k]) for k in range(n + 1)]


# ---------------------------------------------------------------------------
# Rational series
# ---------------------------------------------------------------------------
CC_COEFFICIENTS = (0, 1, 2, 6, 19, 61, 196, 629, 2017, 6466, 20727)


@_suite("cc_polyominoes")
def cc_polyominoes(scale: Scale) -> list[Check]:
    n = _bound(scale, 10, 8)
    gf = automaton_gf(column_convex_automaton())
    coeffs = ratfun_expand(gf, n).scalars()
    column_convex = RatFun.parse(COLUMN_CONVEX)
    horizon = _bound(scale, 200, 100)
    estimate = rational_asymptotics(column_convex)
    ratio = growth_ratio(column_convex, horizon)
    return [
        _sequence_check(f"automaton counts = column oracle, n <= {n}", oracles.column_convex_counts(n), coeffs),
        _sequence_check("automaton counts = published list", CC_COEFFICIENTS[: n + 1], coeffs),
        _value_check("automaton generating function", column_convex, gf),
        _close_check(
            f"1/rho = a_{horizon}/a_{horizon - 1}",
            1 / estimate.rho.center,
            mpmath.mpf(ratio.numerator) / ratio.denominator,
            1e-2,
        ),
    ]


def _one_minus_powers(exponents: Sequence[int]) -> UPolyT:
    den = UPolyT([1])
    for e in exponents:
        den = den * (UPolyT([1]) - UPolyT.monomial(e))
    return den


@_suite("lecture_hall")
def lecture_hall(scale: Scale) -> list[Check]:
    n = _bound(scale, 25, 12)
    checks = []
    for k in range(1, _bound(scale, 5, 3) + 1):
        f = RatFun(UPolyT([1]), _one_minus_powers(range(1, 2 * k, 2)))
        checks.append(
            _sequence_check(
                f"{k}-lecture hall partitions by weight <= {n}",
                oracles.lecture_hall_counts(k, n),
                ratfun_expand(f, n).scalars(),
            )
        )
    return checks


def interval_parts_series(k: int) -> RatFun:
    """q + (1 - q) / prod (1 - q^i), i from k to 2k-1 (k odd) or 2k+1 (k even)."""
    top = 2 * k - 1 if k % 2 else 2 * k + 1
    t = UPolyT.monomial(1)
    return RatFun.polynomial(t) + RatFun(UPolyT([1]) - t, _one_minus_powers(range(k, top + 1)))


@_suite("interval_parts")
def interval_parts(scale: Scale) -> list[Check]:
    n = _bound(scale, 200, 60)
    checks = []
    for k in (1, 2, 3, 4, 5, 6, 7):
        coeffs = ratfun_expand(interval_parts_series(k), n).scalars()
        negative = [i for i, c in enumerate(coeffs) if c < 0]
        computed = "all >= 0" if not negative else f"negative at t^{negative[0]} ({coeffs[negative[0]]})"
        checks.append(Check(f"k = {k}: coefficients to t^{n}", "all >= 0", computed, not negative))
    return checks


# ---------------------------------------------------------------------------
# Heaps, paths
# ---------------------------------------------------------------------------
@_suite("directed_animals")
def directed_animals(scale: Scale) -> list[Check]:
    order = _bound(scale, 49, 20)
    n = _bound(scale, 8, 6)
    heaps = get_fixture("heaps", "system").properized()
    h, p = canonical_solution(heaps, order)
    animals = p * (1 - h).invert()
    geometric = [0] + [3 ** (k - 1) for k in range(1, order + 1)]
    return [
        _sequence_check(f"P/(1-H) = t/(1-3t) mod t^{order + 1}", geometric, animals.scalars()),
        _sequence_check(
            f"compact-source animals = 3^(n-1), n <= {n}",
            geometric[: n + 1],
            oracles.directed_animals(n),
        ),
        _sequence_check(
            f"single-source animals = pyramids, n <= {n}",
            p.truncate(n).scalars(),
            oracles.directed_animals(n, sources=1),
        ),
    ]


@_suite("dyck_area")
def dyck_area(scale: Scale) -> list[Check]:
    n = _bound(scale, 9, 6)
    sums = [oracles.dyck_area_sum(k) for k in range(n + 1)]
    guess = guess_rational([Fraction(s) for s in sums], 1, 1)
    return [
        _sequence_check(f"area sums of Dyck paths of length 2n = 4^n, n <= {n}", [4 ** k for k in range(n + 1)], sums),
        _value_check(
            "rational guess from the area sums",
            RatFun.parse("1/(1 - 4*t)"),
            guess.relation if guess else "none",
        ),
    ]


# ---------------------------------------------------------------------------
# Planar maps
# ---------------------------------------------------------------------------
def _branch_from_one(equation: str, n: int) -> TSeries:
    report = series_roots(parse_polynomial(equation), n)
    (branch,) = [b for b in report.branches if b.constant_term == 1]
    return branch.series


@_suite("planar_maps")
def planar_maps(scale: Scale) -> list[Check]:
    n = _bound(scale, 30, 15)
    n_cat = _bound(scale, 15, 8)
    expected = [oracles.maps_count(k) for k in range(n + 1)]
    branch = _branch_from_one(PLANAR_MAPS, n)
    g1, _ = solve_catalytic(CatalyticEquation.parse(MAPS_CATALYTIC), n_cat)
    (budding,) = canonical_solution(get_fixture("budding", "system"), n)
    # the closure counts maps by R - tR^3 with R = 1 + B
    r = 1 + budding
    closure = r - (r ** 3).shift(1).truncate(n)
    return [
        _sequence_check(f"algebraic branch = 2*3^n*(2n)!/(n!(n+2)!), n <= {n}", expected, branch.scalars()),
        _sequence_check(f"catalytic equation at u = 1, n <= {n_cat}", expected[: n_cat + 1], g1.scalars()),
        _sequence_check(f"budding trees: R - tR^3 = branch mod t^{n + 1}", branch.scalars(), closure.scalars()),
    ]


@_suite("triangulations")
def triangulations(scale: Scale) -> list[Check]:
    n = _bound(scale, 25, 12)
    return [
        _sequence_check(
            f"triangulations = 2^n C(3n,n)/((n+1)(2n+1)), n <= {n}",
            [oracles.triangulation_count(k) for k in range(n + 1)],
            _branch_from_one(TRIANGULATIONS, n).scalars(),
        ),
        _sequence_check(
            f"3-connected triangulations = 2 C(4n+1,n)/((n+1)(3n+2)), n <= {n}",
            [oracles.three_connected_count(k) for k in range(n + 1)],
            _branch_from_one(THREE_CONNECTED, n).scalars(),
        ),
    ]


# ---------------------------------------------------------------------------
# Walks in the plane
# ---------------------------------------------------------------------------
def kreweras_series(n: int) -> TSeries:
    """L(u, v; t) mod t^(n+1), by exact division of (tM - WX) by uvtWX."""
    order = n + 2
    u, v = MPoly.var("u"), MPoly.var("v")
    w_system = PolySystem.of([("W", parse_polynomial("t*(2 + W^3)"))])
    (w,) = canonical_solution(w_system, order)
    w2 = w * w
    root_u = (1 - w2 * u).sqrt()
    root_v = (1 - w2 * v).sqrt()
    m = (TSeries.const(u, order) - w) * root_u * v + (TSeries.const(v, order) - w) * root_v * u
    x = TSeries.of([u * v, -(u + v + u * u * v * v)], order)
    num = m.shift(1) - w * x
    den = (w * x).shift(1) * (u * v)
    return num.divide(den)


@_suite("kreweras")
def kreweras(scale: Scale) -> list[Check]:
    length = _bound(scale, 18, 12)
    n_series = _bound(scale, 10, 6)
    n_square = _bound(scale, 7, 5)
    layers = oracles.plane_walk_counts(oracles.KREWERAS_STEPS, length, oracles.quarter_plane)
    checks = []
    for i in range(4):
        ns = range((length - 2 * i) // 3 + 1)
        checks.append(
            _sequence_check(
                f"walks of length 3n+{2 * i} ending at ({i},0), 3n+{2 * i} <= {length}",
                [oracles.kreweras_axis(i, k) for k in ns],
                [layers[3 * k + 2 * i].get((i, 0), 0) for k in ns],
            )
        )
    checks.append(
        _sequence_check(
            f"L(u,v;t) = quarter-plane counts refined by endpoint, to t^{n_series}",
            [oracles.layer_polynomial(layers[k]) for k in range(n_series + 1)],
            _poly_layers(kreweras_series(n_series), n_series),
        )
    )
    square = oracles.plane_walk_counts(oracles.SQUARE_STEPS, 2 * n_square, oracles.quarter_plane)
    checks.append(
        _sequence_check(
            f"square-lattice quarter-plane returns, n <= {n_square}",
            [oracles.square_quarter_returns(k) for k in range(n_square + 1)],
            [square[2 * k].get((0, 0), 0) for k in range(n_square + 1)],
        )
    )
    return checks


def slit_plane_series(n: int) -> TSeries:
    """S(u, v; t u v) mod t^(n+1); [t^k] is a polynomial carrying u^(i+k) v^(j+k)."""
    u, v = MPoly.var("u"), MPoly.var("v")
    uv = u * v
    minus = TSeries.of([1, uv * -4], n).sqrt()
    plus = TSeries.of([1, uv * 4], n).sqrt()
    half_a = (TSeries.of([1, v * (u + 1) * -2], n) + minus) * Fraction(1, 2)
    half_b = (TSeries.of([1, v * (u - 1) * 2], n) + plus) * Fraction(1, 2)
    kernel = TSeries.of([1, -(u * u * v + v + u * v * v + u)], n)
    return half_a.sqrt() * half_b.sqrt() * kernel.invert()


@_suite("slit_plane")
def slit_plane(scale: Scale) -> list[Check]:
    n = _bound(scale, 7, 5)
    n_series = _bound(scale, 10, 6)
    layers = oracles.plane_walk_counts(oracles.SQUARE_STEPS, max(2 * n + 1, n_series), oracles.off_slit)
    catalan = oracles.catalan
    return [
        _sequence_check(
            f"s(1,0; 2n+1) = C(2n+1), n <= {n}",
            [catalan(2 * k + 1) for k in range(n + 1)],
            [layers[2 * k + 1].get((1, 0), 0) for k in range(n + 1)],
        ),
        _sequence_check(
            f"s(0,1; 2n+1) = 4^n C(n), n <= {n}",
            [4 ** k * catalan(k) for k in range(n + 1)],
            [layers[2 * k + 1].get((0, 1), 0) for k in range(n + 1)],
        ),
        _sequence_check(
            f"2 s(-1,1; 2n) = C(2n), 1 <= n <= {n}",
            [catalan(2 * k) for k in range(1, n + 1)],
            [2 * layers[2 * k].get((-1, 1), 0) for k in range(1, n + 1)],
        ),
        _sequence_check(
            f"S(u,v;t) = slit-plane counts refined by endpoint, to t^{n_series}",
            [oracles.layer_polynomial(layers[k], shift=k) for k in range(n_series + 1)],
            _poly_layers(slit_plane_series(n_series), n_series),
        ),
    ]


# ---------------------------------------------------------------------------
# Trees
# ---------------------------------------------------------------------------
def embedded_tree_series(j: int, n: int) -> TSeries:
    """S_j(t, u) = T (1 + mu Z^j)(1 + mu Z^(j+5)) / ((1 + mu Z^(j+2))(1 + mu Z^(j+3)))."""
    (tree,) = canonical_solution(PolySystem.of([("T", parse_polynomial("t*(1 + T)^2"))]), n)
    tree = 1 + tree
    z = fixed_point(lambda s: ((1 + s * s) ** 2 * (1 - s + s * s).invert()).shift(1), n)
    fixed = ((1 + z) ** 2 * (1 + z + z * z) * (1 - z) ** 3).invert()
    u_minus_1 = MPoly.var("u") - 1

    def step(mu: TSeries) -> TSeries:
        body = z * (1 + mu * z) ** 2 * (1 + mu * z ** 2) * (1 + mu * z ** 6)
        return body * fixed * (1 - mu * mu * z ** 5).invert() * u_minus_1

    mu = fixed_point(step, n)

    def factor(e: int) -> TSeries:
        return 1 + mu * z ** e

    return tree * factor(j) * factor(j + 5) * (factor(j + 2) * factor(j + 3)).invert()


@_suite("embedded_trees")
def embedded_trees(scale: Scale) -> list[Check]:
    n = _bound(scale, 11, 7)
    checks = []
    for j in range(5):
        checks.append(
            _sequence_check(
                f"binary trees by nodes and nodes at abscissa {j}, n <= {n}",
                oracles.embedded_tree_polynomials(n, j),
                _poly_layers(embedded_tree_series(j, n), n),
            )
        )
    return checks


# ---------------------------------------------------------------------------
# Hypergeometric sequences
# ---------------------------------------------------------------------------
HYPERGEOMETRIC = (
    ((6, 1), (3, 2, 2)),
    ((10, 1), (5, 4, 2)),
    ((20, 1), (10, 7, 4)),
)


def factorial_ratio(top: Sequence[int], bottom: Sequence[int], n: int) -> Fraction:
    num = 1
    for a in top:
        num *= factorial(a * n)
    den = 1
    for b in bottom:
        den *= factorial(b * n)
    return Fraction(num, den)


@_suite("hypergeometric")
def hypergeometric(scale: Scale) -> list[Check]:
    n = _bound(scale, 20, 10)
    checks = []
    for top, bottom in HYPERGEOMETRIC:
        name = f"({', '.join(map(str, top))} | {', '.join(map(str, bottom))})"
        checks.append(_value_check(f"{name}: sum a = sum b", sum(top), sum(bottom)))
        checks.append(_value_check(f"{name}: e = d + 1", len(top) + 1, len(bottom)))
        bad = [k for k in range(n + 1) if factorial_ratio(top, bottom, k).denominator != 1]
        checks.append(
            Check(
                f"{name}: f_n integer for n <= {n}",
                "all integers",
                "all integers" if not bad else f"non-integer at n = {bad[0]}",
                not bad,
            )
        )
    return checks


# ---------------------------------------------------------------------------
# Registry access
# ---------------------------------------------------------------------------
def list_suites() -> list[str]:
    return sorted(SUITES)


def run_suite(name: str, scale: Scale = Scale.DEFAULT) -> SuiteReport:
    """Run every check of suite *name*; timing is left to the caller."""
    fn = SUITES.get(name)
    if fn is None:
        raise UsageError(f"unknown suite {name!r} (known: {', '.join(list_suites())})")
    return SuiteReport(suite=name, scale=scale, checks=fn(scale))
