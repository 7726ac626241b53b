"""Certified numerical roots of rational polynomials.

Roots come from mpmath's polynomial solver at a working precision; each is
then wrapped in a disc that provably contains a root: for a squarefree
polynomial of degree n, some root lies within n*|p(z)/p'(z)| of z. Discs of
different roots of the same factor must be disjoint, otherwise the roots are
reported as unresolved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import mpmath
from mpmath.libmp import NoConvergence

from gfkit.domain.errors import ComputationError, UnresolvedRootsError
from gfkit.domain.polynomials import UPolyT

DEFAULT_DPS = 60
RESIDUAL_BOUND = mpmath.mpf("1e-12")


def make_context(dps: int = DEFAULT_DPS) -> mpmath.ctx_mp.MPContext:
    ctx = mpmath.MPContext()
    ctx.dps = dps
    return ctx


def to_mp(ctx, c: Fraction):
    return ctx.mpf(c.numerator) / c.denominator


def fmt(x, digits: int = 15) -> str:
    return mpmath.nstr(x, digits)


@dataclass(frozen=True)
class Enclosure:
    """A disc (or interval, when imaginary parts vanish) around a number."""

    center: Any
    radius: Any

    @property
    def width(self):
        return 2 * self.radius

    def contains(self, value) -> bool:
        return abs(value - self.center) <= self.radius

    def to_dict(self) -> dict:
        c = self.center
        if c.imag != 0:
            center = f"{fmt(c.real)}{'+' if c.imag >= 0 else '-'}{fmt(abs(c.imag))}i"
        else:
            center = fmt(c.real)
        return {"center": center, "radius": mpmath.nstr(self.radius, 3)}


@dataclass(frozen=True)
class CertifiedRoot:
    enclosure: Enclosure
    residual: Any
    multiplicity: int
    factor: UPolyT

    @property
    def center(self):
        return self.enclosure.center

    @property
    def modulus(self):
        return abs(self.enclosure.center)

    @property
    def is_real(self) -> bool:
        return abs(self.enclosure.center.imag) <= self.enclosure.radius


def _horner(ctx, coeffs_high_first, z):
    acc = ctx.mpc(0)
    for c in coeffs_high_first:
        acc = acc * z + c
    return acc


def certified_roots(p: UPolyT, dps: int = DEFAULT_DPS) -> list[CertifiedRoot]:
    """All complex roots of a rational polynomial, with multiplicities and disjoint enclosures."""
    if not p.is_rational:
        raise ComputationError("root isolation needs rational coefficients")
    if p.is_zero:
        raise ComputationError("the zero polynomial has no isolated roots")
    ctx = make_context(dps)
    out: list[CertifiedRoot] = []
    for factor, mult in p.squarefree_decomposition():
        coeffs = [to_mp(ctx, c) for c in reversed(factor.coeffs)]
        deriv = [to_mp(ctx, c) for c in reversed(factor.derivative().coeffs)]
        n = factor.degree
        if n == 1:
            approx = [-coeffs[1] / coeffs[0]]
        else:
            try:
                approx = ctx.polyroots(coeffs, maxsteps=50 + 20 * n, extraprec=2 * dps)
            except NoConvergence as exc:
                raise UnresolvedRootsError(f"root finder did not converge on {factor}") from exc
        encl: list[CertifiedRoot] = []
        for z in approx:
            z = ctx.mpc(z)
            pz = _horner(ctx, coeffs, z)
            dpz = _horner(ctx, deriv, z)
            if dpz == 0:
                raise UnresolvedRootsError(f"derivative vanishes at an approximate root of {factor}")
            residual = abs(pz)
            if residual > RESIDUAL_BOUND:
                raise UnresolvedRootsError(f"residual {fmt(residual, 3)} too large for {factor}")
            radius = n * abs(pz / dpz) + ctx.mpf(10) ** (-(dps - 5))
            encl.append(CertifiedRoot(Enclosure(z, radius), residual, mult, factor))
        for i, a in enumerate(encl):
            for b in encl[i + 1:]:
                if abs(a.center - b.center) <= a.enclosure.radius + b.enclosure.radius:
                    raise UnresolvedRootsError(f"root enclosures of {factor} overlap")
        out.extend(encl)
    return sorted(out, key=lambda r: (r.modulus, r.center.real, r.center.imag))


def minimal_modulus(roots: list[CertifiedRoot], separation) -> list[CertifiedRoot]:
    """Roots whose modulus is within *separation* (relative) of the smallest one."""
    if not roots:
        return []
    rmin = roots[0].modulus
    tol = separation * rmin + roots[0].enclosure.radius
    return [r for r in roots if r.modulus - rmin <= tol + r.enclosure.radius]


@dataclass(frozen=True)
class AsymptoticEstimate:
    """a_n ~ kappa * rho^-n * n^d.

    ``d_interval`` is None when d is exact (rational functions) and a
    confidence interval when d was fitted.
    """

    rho: Enclosure
    source: str
    d: float
    d_interval: tuple[float, float] | None = None
    kappa: Enclosure | None = None
    method: str = "dominant-pole"

    def __post_init__(self) -> None:
        if self.rho.center <= 0:
            raise ComputationError("radius of convergence must be positive")
        if self.rho.width >= mpmath.mpf("1e-8"):
            raise UnresolvedRootsError(f"radius enclosure too wide ({fmt(self.rho.width, 3)})")

    def approximate(self, n: int):
        """kappa * rho^-n * n^d at the center of every enclosure."""
        if self.kappa is None:
            raise ComputationError("no constant available for this estimate")
        rho = self.rho.center
        return self.kappa.center.real * rho ** (-n) * mpmath.mpf(n) ** self.d

    def to_dict(self) -> dict:
        out: dict = {
            "rho": self.rho.to_dict(),
            "singularity_of": self.source,
            "d": int(self.d) if self.d_interval is None else round(self.d, 6),
            "method": self.method,
        }
        if self.d_interval is not None:
            out["d_interval"] = [round(self.d_interval[0], 6), round(self.d_interval[1], 6)]
        if self.kappa is not None:
            out["kappa"] = self.kappa.to_dict()
        return out
