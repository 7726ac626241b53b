"""Catalytic equations in fixed-point form, solved t-adically.

The right-hand side is a polynomial in t, u and three series symbols:
``G`` for G(u), ``G1`` for G(1) and ``DD`` for the divided difference
(u G(u) - G(1)) / (u - 1). Every monomial holding one of them must carry a
factor t, which makes each iteration pass fix one more coefficient.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from gfkit.domain.errors import ComputationError, ImproperSystemError
from gfkit.domain.expressions import parse_polynomial
from gfkit.domain.polynomials import MPoly, to_mpoly
from gfkit.domain.series import TSeries, substitute

SERIES_SYMBOLS = ("G", "G1", "DD")
ALLOWED = frozenset(("t", "u") + SERIES_SYMBOLS)
_G_OF_U = re.compile(r"G\s*\(\s*u\s*\)")
_LHS = re.compile(r"^\s*G\s*\(\s*u\s*\)\s*=")


@dataclass(frozen=True)
class CatalyticEquation:
    rhs: MPoly

    def __post_init__(self) -> None:
        extra = sorted(set(self.rhs.variables) - ALLOWED)
        if extra:
            raise ComputationError(f"catalytic equation uses unknown names: {', '.join(extra)}")
        for mono in self.rhs.terms:
            exps = dict(mono)
            if any(s in exps for s in SERIES_SYMBOLS) and not exps.get("t"):
                raise ImproperSystemError(
                    "every term holding G(u), G1 or DD needs a factor t (the iteration would not contract)"
                )

    @classmethod
    def parse(cls, text: str, *, source: str = "<input>", line: int = 1) -> "CatalyticEquation":
        """Accepts ``G(u) = R`` or just ``R``; ``G(u)`` may be written ``G``."""
        body = text
        column = 1
        m = _LHS.match(text)
        if m:
            body = text[m.end():]
            column = m.end() + 1
        return cls(parse_polynomial(_G_OF_U.sub("G", body), source=source, line=line, column=column))

    @property
    def seed(self) -> MPoly:
        """R at t = 0; a polynomial in u forced by the contraction property."""
        return self.rhs.coefficient("t", 0)

    def __str__(self) -> str:
        return f"G(u) = {self.rhs}"


def _at_one(g: TSeries) -> TSeries:
    return g.map(lambda c: to_mpoly(c).evaluate({"u": 1}))


def _divided_difference(g: TSeries) -> TSeries:
    u = MPoly.var("u")
    den = u - 1

    def dd(c) -> MPoly:
        p = to_mpoly(c)
        return (u * p - p.evaluate({"u": 1})).exact_div(den)

    return g.map(dd)


def _pass(eq: CatalyticEquation, g: TSeries, order: int) -> TSeries:
    g = TSeries(g.coeffs, order)
    values = {"G": g, "G1": _at_one(g), "DD": _divided_difference(g)}
    return substitute(eq.rhs, values, order)


def solve_catalytic(eq: CatalyticEquation, n: int) -> tuple[TSeries, TSeries]:
    """(G(1, t), G(u, t)) mod t^(n+1)."""
    if n < 0:
        raise ComputationError("order must be non-negative")
    g = TSeries.const(eq.seed, 0)
    for m in range(1, n + 1):
        g = _pass(eq, g, m)
    if _pass(eq, g, n) != g:
        raise ComputationError("catalytic iteration did not stabilise")
    return _at_one(g), g
