"""Conjecturing rational functions and algebraic equations from coefficients.

Both guessers solve an exact linear system over Q and keep a relation only if
it annihilates every supplied coefficient, with at least
``MIN_VALIDATED`` coefficients beyond the ones needed to pin it down.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence, Union

from gfkit.domain.errors import InsufficientDataError, ReconstructionError
from gfkit.domain.linalg import nullspace
from gfkit.domain.polynomials import MPoly, UPolyT, monomial_key
from gfkit.domain.ratfun import RatFun, ratfun_expand
from gfkit.domain.series import TSeries

MIN_VALIDATED = 3
ALGEBRAIC_VAR = "a"


@dataclass(frozen=True)
class GuessResult:
    kind: str
    relation: Union[RatFun, MPoly]
    used: int
    validated: int
    degrees: tuple[int, int]

    def __post_init__(self) -> None:
        if self.kind not in ("rational", "algebraic"):
            raise ValueError(f"unknown guess kind {self.kind!r}")
        if self.validated < MIN_VALIDATED:
            raise ReconstructionError(f"a guess needs at least {MIN_VALIDATED} validating coefficients")

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "relation": str(self.relation),
            "used": self.used,
            "validated": self.validated,
            "degrees": list(self.degrees),
        }


def pade_fit(coeffs: Sequence[Fraction], m: int, q: int) -> RatFun | None:
    """A rational function with numerator degree <= m and denominator degree <= q matching all of *coeffs*."""
    a = [Fraction(c) for c in coeffs]
    top = len(a) - 1
    rows = [
        [a[k - j] if k - j >= 0 else Fraction(0) for j in range(q + 1)]
        for k in range(m + 1, top + 1)
    ]
    basis = nullspace(rows, q + 1)
    if not basis:
        return None
    # RREF vectors: the first free column gives the lowest-degree denominator.
    den = basis[0]
    num = [sum((den[j] * a[k - j] for j in range(min(q, k) + 1)), Fraction(0)) for k in range(min(m, top) + 1)]
    f = RatFun(UPolyT(num), UPolyT(den))
    if not f.den[0]:
        return None
    if ratfun_expand(f, top).coeffs != tuple(a):
        return None
    return f


def guess_rational(coeffs: Sequence[Fraction], max_num_deg: int, max_den_deg: int) -> GuessResult | None:
    """Smallest (m + q, then q) rational fit inside the degree grid, validated by every coefficient."""
    n = len(coeffs)
    grid = sorted(
        ((m, q) for m in range(max_num_deg + 1) for q in range(max_den_deg + 1)),
        key=lambda mq: (mq[0] + mq[1], mq[1]),
    )
    admissible = [(m, q) for m, q in grid if n - (m + q + 1) >= MIN_VALIDATED]
    if not admissible:
        raise InsufficientDataError(
            f"{n} coefficients leave fewer than {MIN_VALIDATED} for validation at every degree pair"
        )
    for m, q in admissible:
        f = pade_fit(coeffs, m, q)
        if f is not None:
            return GuessResult("rational", f, m + q + 1, n - (m + q + 1), (m, q))
    return None


def _unknowns(d: int, e: int) -> list[tuple[int, int]]:
    """(t-exponent, a-exponent) pairs in increasing term order."""
    pairs = [(i, j) for i in range(d + 1) for j in range(e + 1)]
    return sorted(pairs, key=lambda ij: monomial_key(_monomial(*ij)))


def _monomial(i: int, j: int):
    return tuple(p for p in (("t", i), (ALGEBRAIC_VAR, j)) if p[1])


def normalize_relation(p: MPoly) -> MPoly:
    """Primitive integer coefficients with a positive leading term."""
    den = lcm(*(c.denominator for c in p.coefficients()))
    ints = [int(c * den) for c in p.coefficients()]
    g = 0
    for v in ints:
        g = gcd(g, v)
    scaled = p * Fraction(den, g)
    _, lead = scaled.leading_term()
    return -scaled if lead < 0 else scaled


def guess_algebraic(coeffs: Sequence[Fraction], d: int, e: int) -> GuessResult | None:
    """A bidegree-(d, e) polynomial P with P(t, A(t)) = 0 to the order of the data."""
    n = len(coeffs)
    unknowns = _unknowns(d, e)
    if n < len(unknowns) + MIN_VALIDATED - 1:
        raise InsufficientDataError(
            f"bidegree ({d}, {e}) needs at least {len(unknowns) + MIN_VALIDATED - 1} coefficients, got {n}"
        )
    top = n - 1
    series = TSeries.of(coeffs, top)
    powers = [TSeries.const(1, top)]
    for _ in range(e):
        powers.append(powers[-1] * series)
    rows = [
        [powers[j][k - i] if k >= i else Fraction(0) for i, j in unknowns]
        for k in range(top + 1)
    ]
    basis = nullspace(rows, len(unknowns))
    if not basis:
        return None
    vec = basis[0]
    relation = MPoly({_monomial(i, j): c for (i, j), c in zip(unknowns, vec) if c})
    return GuessResult("algebraic", normalize_relation(relation), len(unknowns) - 1, n - (len(unknowns) - 1), (d, e))
