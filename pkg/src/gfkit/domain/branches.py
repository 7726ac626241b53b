"""Power-series branches of algebraic equations P(t, a) = 0 and their asymptotics.

Rational simple roots of P(0, a) are lifted by Newton iteration, doubling the
known order at every step. Roots of P(0, a) that are irrational or multiple are
counted and reported, never expanded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np
import sympy

from gfkit.domain.errors import ComputationError, DominanceError
from gfkit.domain.expressions import mpoly_to_sympy
from gfkit.domain.linalg import discriminant
from gfkit.domain.numeric import (
    DEFAULT_DPS,
    AsymptoticEstimate,
    Enclosure,
    certified_roots,
    make_context,
    to_mp,
)
from gfkit.domain.polynomials import MPoly, UPolyT, coeff_str
from gfkit.domain.series import TSeries, substitute

BRANCH_VAR = "a"
GROWTH_TOLERANCE = 0.1
MIN_FIT_POINTS = 8


@dataclass(frozen=True)
class BranchSolution:
    constant_term: Fraction
    series: TSeries
    residual_order: int

    def to_dict(self) -> dict:
        return {
            "constant_term": coeff_str(self.constant_term),
            "order": self.series.order,
            "residual_order": self.residual_order,
            "coefficients": self.series.coefficient_strings(),
        }


@dataclass(frozen=True)
class BranchReport:
    """Lifted branches plus the roots of P(0, a) that were not lifted."""

    branches: tuple[BranchSolution, ...]
    irrational_degree: int
    ramified: tuple[tuple[Fraction, int], ...]
    unbounded_degree: int

    def to_dict(self) -> dict:
        return {
            "branches": [b.to_dict() for b in self.branches],
            "irrational_degree": self.irrational_degree,
            "ramified": [{"root": coeff_str(r), "multiplicity": m} for r, m in self.ramified],
            "unbounded_degree": self.unbounded_degree,
        }


def _check_variables(p: MPoly, var: str) -> None:
    extra = [v for v in p.variables if v not in ("t", var)]
    if extra:
        raise ComputationError(f"equation has variables other than t and {var}: {', '.join(extra)}")


def _strip_t(p: MPoly) -> MPoly:
    """Divide out the largest power of t dividing p."""
    low = min(dict(m).get("t", 0) for m in p.terms)
    return p.exact_div(MPoly.var("t", low)) if low else p


def _rational_roots(p0: MPoly, var: str) -> dict[Fraction, int]:
    poly = sympy.Poly(mpoly_to_sympy(p0), sympy.Symbol(var), domain=sympy.QQ)
    return {Fraction(int(r.p), int(r.q)): int(m) for r, m in poly.ground_roots().items()}


def lift_branch(p: MPoly, a0: Fraction, n: int, var: str = BRANCH_VAR) -> TSeries:
    """Newton iteration a <- a - P(t, a) / P_a(t, a) from a(0) = a0, to order n."""
    dp = p.derivative(var)
    current = TSeries.const(a0, 0)
    prec = 0
    while prec < n:
        prec = min(2 * prec + 1, n)
        a = TSeries(current.coeffs, prec)
        residual = substitute(p, {var: a}, prec)
        slope = substitute(dp, {var: a}, prec)
        current = (a - residual * slope.invert()).truncate(prec)
    return current


def verify_algebraic(a: TSeries, p: MPoly, var: str = BRANCH_VAR) -> int:
    """Largest m <= order(a) with P(t, a) = 0 mod t^(m+1); -1 when the constant term already fails."""
    residual = substitute(p, {var: a}, a.order)
    v = residual.valuation()
    return a.order if v > residual.order else v - 1


def series_roots(p: MPoly, n: int, var: str = BRANCH_VAR) -> BranchReport:
    """Every power-series solution a(t) with rational simple a(0), to order n."""
    if p.is_zero:
        raise ComputationError("the zero polynomial has no branches")
    if n < 0:
        raise ComputationError("order must be non-negative")
    _check_variables(p, var)
    degree = p.degree(var)
    if degree < 1:
        raise ComputationError(f"equation does not involve {var}")
    if discriminant(p, var).is_zero:
        raise ComputationError(f"equation is not squarefree in {var} (zero discriminant)")
    p = _strip_t(p)
    p0 = p.coefficient("t", 0)
    roots = _rational_roots(p0, var)
    branches: list[BranchSolution] = []
    ramified: list[tuple[Fraction, int]] = []
    for a0 in sorted(roots):
        if roots[a0] > 1:
            ramified.append((a0, roots[a0]))
            continue
        series = lift_branch(p, a0, n, var)
        branches.append(BranchSolution(a0, series, verify_algebraic(series, p, var)))
    p0_degree = p0.degree(var)
    return BranchReport(
        branches=tuple(branches),
        irrational_degree=p0_degree - sum(roots.values()),
        ramified=tuple(ramified),
        unbounded_degree=degree - p0_degree,
    )


# ---------------------------------------------------------------------------
# Asymptotics
# ---------------------------------------------------------------------------
def _positive_candidates(p: MPoly, var: str, dps: int) -> list[tuple[Enclosure, str]]:
    sources = [discriminant(p, var), p.coefficient(var, p.degree(var))]
    out: list[tuple[Enclosure, str]] = []
    for poly in sources:
        up = UPolyT.from_mpoly(poly, "t")
        if up.degree < 1:
            continue
        for root in certified_roots(up, dps):
            if root.is_real and root.center.real > 0:
                out.append((Enclosure(root.center.real, root.enclosure.radius), str(root.factor)))
    return sorted(out, key=lambda c: c[0].center)


def _slope(ctx, points: list[tuple[int, Fraction]], rho) -> tuple[float, float, float]:
    xs = np.array([float(ctx.log(k)) for k, _ in points])
    ys = np.array([float(ctx.log(to_mp(ctx, c)) + k * ctx.log(rho)) for k, c in points])
    (slope, intercept), cov = np.polyfit(xs, ys, 1, cov=True)
    return float(slope), float(intercept), float(np.sqrt(max(cov[0][0], 0.0)))


def algebraic_asymptotics(
    p: MPoly, branch: BranchSolution, n_fit: int, dps: int = DEFAULT_DPS, var: str = BRANCH_VAR
) -> AsymptoticEstimate:
    """rho from the discriminant and leading coefficient, d fitted on the last n_fit/2 coefficients."""
    coeffs = branch.series.scalars()
    if n_fit > branch.series.order:
        raise ComputationError(f"branch known to order {branch.series.order}, fit needs {n_fit}")
    if any(c < 0 for c in coeffs[: n_fit + 1]):
        raise ComputationError("asymptotic fit needs non-negative coefficients")
    points = [(k, coeffs[k]) for k in range(max(1, n_fit // 2), n_fit + 1) if coeffs[k]]
    if len(points) < MIN_FIT_POINTS:
        raise ComputationError(f"need at least {MIN_FIT_POINTS} nonzero coefficients in the fit window")
    (k1, c1), (k2, c2) = points[-2], points[-1]
    ctx = make_context(dps)
    estimate = ctx.root(to_mp(ctx, c1) / to_mp(ctx, c2), k2 - k1)
    candidates = _positive_candidates(p, var, dps)
    if not candidates:
        raise DominanceError("no positive real root among discriminant and leading coefficient")
    chosen = next(
        (c for c in candidates if abs(c[0].center - estimate) <= GROWTH_TOLERANCE * c[0].center), None
    )
    if chosen is None:
        listed = ", ".join(mpmath.nstr(c[0].center, 8) for c in candidates)
        raise DominanceError(
            f"coefficient growth ({mpmath.nstr(estimate, 8)}) matches no candidate singularity ({listed})"
        )
    rho, source = chosen
    d, intercept, stderr = _slope(ctx, points, ctx.mpf(rho.center))
    half = len(points) // 2
    d_low, _, _ = _slope(ctx, points[:half], ctx.mpf(rho.center)) if half >= 4 else (d, 0.0, 0.0)
    d_high, _, _ = _slope(ctx, points[half:], ctx.mpf(rho.center)) if len(points) - half >= 4 else (d, 0.0, 0.0)
    spread = max(3 * stderr, abs(d_high - d_low))
    kappa = ctx.exp(intercept)
    kappa_radius = kappa * (ctx.exp(spread * ctx.log(n_fit)) - 1)
    return AsymptoticEstimate(
        rho=rho,
        source=source,
        d=d,
        d_interval=(d - spread, d + spread),
        kappa=Enclosure(kappa, kappa_radius),
        method="fit",
    )
