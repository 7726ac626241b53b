"""Rational functions in t with Laurent-polynomial dependence on s.

f = num / den with den(0, s) = c * s^e, so f expands t-adically and every
t-coefficient is a Laurent polynomial in s. Slices extract [s^k]; diagonals of
functions of (x, y) go through x = t s, y = t / s and keep [s^0].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy

from gfkit.domain.errors import ComputationError
from gfkit.domain.expressions import parse_sympy, sympy_to_mpoly
from gfkit.domain.polynomials import MPoly
from gfkit.domain.series import TSeries

Laurent = dict[int, Fraction]
SLICE_MODES = ("slice", "diagonal")


def _laurent_coeffs(p: MPoly) -> dict[int, Laurent]:
    """{t-exponent: {s-exponent: coefficient}}."""
    out: dict[int, Laurent] = {}
    for mono, c in p.terms.items():
        exps = dict(mono)
        row = out.setdefault(exps.get("t", 0), {})
        row[exps.get("s", 0)] = row.get(exps.get("s", 0), Fraction(0)) + c
    return out


@dataclass(frozen=True)
class BiRatFun:
    """num / den in t and s; the denominator at t = 0 must be a single monomial c*s^e."""

    num: MPoly
    den: MPoly

    def __post_init__(self) -> None:
        for p in (self.num, self.den):
            extra = [v for v in p.variables if v not in ("t", "s")]
            if extra:
                raise ComputationError(f"bivariate rational function has extra variables: {', '.join(extra)}")
        if self.den.is_zero:
            raise ComputationError("zero denominator")
        head = self.den.coefficient("t", 0)
        if len(head.terms) != 1:
            raise ComputationError(
                f"denominator at t = 0 is {head if not head.is_zero else 0}, not a monomial in s; "
                "the function has no t-adic expansion"
            )

    @classmethod
    def parse(cls, text: str, *, variables: str = "ts", source: str = "<input>", line: int = 1) -> "BiRatFun":
        """Parse text in (t, s), or in (x, y) with x = t s and y = t / s when ``variables='xy'``."""
        expr = parse_sympy(text, source=source, line=line)
        if variables == "xy":
            t, s = sympy.Symbol("t"), sympy.Symbol("s")
            expr = expr.subs({sympy.Symbol("x"): t * s, sympy.Symbol("y"): t / s}, simultaneous=True)
        elif variables != "ts":
            raise ComputationError(f"unknown variable pair {variables!r}")
        num, den = sympy.fraction(sympy.together(expr))
        kw = dict(source=source, line=line)
        return cls(sympy_to_mpoly(sympy.expand(num), **kw), sympy_to_mpoly(sympy.expand(den), **kw))

    def expand(self, n: int) -> list[Laurent]:
        """t-coefficients 0..n, each a Laurent polynomial in s."""
        nums = _laurent_coeffs(self.num)
        dens = _laurent_coeffs(self.den)
        ((e, c),) = dens[0].items()
        out: list[Laurent] = []
        for k in range(n + 1):
            acc: Laurent = dict(nums.get(k, {}))
            for j in range(1, k + 1):
                dj = dens.get(j)
                if not dj:
                    continue
                for a, x in dj.items():
                    for b, y in out[k - j].items():
                        acc[a + b] = acc.get(a + b, Fraction(0)) - x * y
            out.append({a - e: v / c for a, v in acc.items() if v})
        return out

    def __str__(self) -> str:
        return f"({self.num})/({self.den})"


def laurent_slice(f: BiRatFun, k: int, n: int, mode: str = "slice") -> TSeries:
    """[s^k] of f to order n, or (diagonal) [s^0] with t^2 -> t."""
    if n < 0:
        raise ComputationError("order must be non-negative")
    if mode == "slice":
        return TSeries(tuple(row.get(k, Fraction(0)) for row in f.expand(n)), n)
    if mode != "diagonal":
        raise ComputationError(f"unknown slice mode {mode!r}")
    rows = f.expand(2 * n + 1)
    centre = [row.get(0, Fraction(0)) for row in rows]
    odd = next((i for i in range(1, len(centre), 2) if centre[i]), None)
    if odd is not None:
        raise ComputationError(f"diagonal has a nonzero odd coefficient at t^{odd}")
    return TSeries(tuple(centre[0::2]), n)
