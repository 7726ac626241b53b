"""Sections, dominant singularities and asymptotics of rational series."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import mpmath

from gfkit.domain.errors import (
    ComputationError,
    DominanceError,
    NotInvertibleError,
    ReconstructionError,
    UnresolvedRootsError,
    UsageError,
)
from gfkit.domain.guessing import MIN_VALIDATED, pade_fit
from gfkit.domain.numeric import (
    DEFAULT_DPS,
    AsymptoticEstimate,
    Enclosure,
    certified_roots,
    make_context,
    minimal_modulus,
)
from gfkit.domain.ratfun import RatFun, ratfun_expand

SANITY_HORIZON = 200


def _require_power_series(f: RatFun) -> None:
    if not f.is_rational:
        raise ComputationError("expected a rational function with rational coefficients")
    if not f.den[0]:
        raise NotInvertibleError("not a power series at 0: the denominator vanishes at t = 0")


def section(f: RatFun, r: int, p: int) -> RatFun:
    """sum_n a_{np+r} t^n, rebuilt by Pade fitting and checked on further coefficients."""
    if p < 1 or not 0 <= r < p:
        raise UsageError(f"section needs 0 <= r < p, got r={r}, p={p}")
    _require_power_series(f)
    if p == 1:
        return f
    q = f.den.degree
    dn = max(f.num.degree, 0)
    fit = 2 * q + dn + 2
    total = fit + max(MIN_VALIDATED, p * q)
    expanded = ratfun_expand(f, p * (total - 1) + r)
    picked = [expanded[p * k + r] for k in range(total)]
    g = pade_fit(picked, dn // p + q, q)
    if g is None:
        raise ReconstructionError(f"section r={r}, p={p} failed validation")
    return g


@dataclass(frozen=True)
class SectionDominance:
    p: int
    r: int
    section: RatFun
    count: int
    enclosures: tuple[Enclosure, ...]

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "r": self.r,
            "section": str(self.section),
            "dominant": self.count,
            "enclosures": [e.to_dict() for e in self.enclosures],
        }


@dataclass(frozen=True)
class SoittolaReport:
    """Dominant-singularity counts of every section A_{r,p}, p <= p_max. Evidence only."""

    entries: tuple[SectionDominance, ...]

    def count(self, p: int, r: int) -> int:
        for e in self.entries:
            if (e.p, e.r) == (p, r):
                return e.count
        raise KeyError((p, r))

    @property
    def unique_dominant(self) -> bool:
        return all(e.count <= 1 for e in self.entries)

    def to_dict(self) -> dict:
        return {"sections": [e.to_dict() for e in self.entries], "unique_dominant": self.unique_dominant}


def check_nonnegative_integers(f: RatFun, horizon: int = SANITY_HORIZON) -> None:
    for k, c in enumerate(ratfun_expand(f, horizon).coeffs):
        if c.denominator != 1:
            raise ComputationError(f"coefficient of t^{k} is not an integer ({c})")
        if c < 0:
            raise ComputationError(f"negative coefficient at t^{k} ({c})")


def soittola_check(f: RatFun, p_max: int, precision: float = 1e-6, dps: int = DEFAULT_DPS) -> SoittolaReport:
    _require_power_series(f)
    check_nonnegative_integers(f)
    sep = mpmath.mpf(precision)
    entries: list[SectionDominance] = []
    for p in range(1, p_max + 1):
        for r in range(p):
            s = section(f, r, p)
            if s.den.degree < 1:
                entries.append(SectionDominance(p, r, s, 0, ()))
                continue
            roots = certified_roots(s.den, dps)
            dominant = minimal_modulus(roots, sep)
            if any(x.enclosure.radius > sep * dominant[0].modulus for x in dominant):
                raise UnresolvedRootsError(f"dominant roots of section r={r}, p={p} are not separated at {precision}")
            entries.append(SectionDominance(p, r, s, len(dominant), tuple(x.enclosure for x in dominant)))
    return SoittolaReport(tuple(entries))


def rational_asymptotics(f: RatFun, dps: int = DEFAULT_DPS) -> AsymptoticEstimate:
    """a_n ~ kappa rho^-n n^d from the unique pole of minimal modulus."""
    _require_power_series(f)
    if f.den.degree < 1:
        raise ComputationError("a polynomial has no dominant singularity")
    roots = certified_roots(f.den, dps)
    dominant = minimal_modulus(roots, mpmath.mpf(10) ** (-(dps // 2)))
    if len(dominant) > 1:
        raise DominanceError(f"multiple dominant poles ({len(dominant)} of modulus {mpmath.nstr(dominant[0].modulus, 10)})")
    root = dominant[0]
    m = root.multiplicity
    ctx = make_context(dps)
    dm = f.den
    for _ in range(m):
        dm = dm.derivative()

    def kappa_at(z):
        return f.num(z) * factorial(m) / (dm(z) * (-z) ** m) / factorial(m - 1)

    z = ctx.mpc(root.center)
    kappa = kappa_at(z)
    spread = abs(kappa_at(z + root.enclosure.radius) - kappa)
    if root.is_real:
        kappa = ctx.mpf(kappa.real)
    k_encl = Enclosure(kappa, 2 * spread + ctx.mpf(10) ** (-(dps - 5)))
    rho = Enclosure(ctx.mpf(abs(z)), root.enclosure.radius)
    return AsymptoticEstimate(rho=rho, source=str(root.factor), d=float(m - 1), kappa=k_encl)


def growth_ratio(f: RatFun, n: int) -> Fraction:
    """a_n / a_{n-1}, the naive growth evidence the pole analysis should match."""
    coeffs = ratfun_expand(f, n).coeffs
    if not coeffs[n - 1]:
        raise ComputationError(f"coefficient of t^{n - 1} vanishes")
    return coeffs[n] / coeffs[n - 1]
