"""Rational functions in t."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from gfkit.domain.errors import NotInvertibleError
from gfkit.domain.expressions import parse_fraction
from gfkit.domain.polynomials import Coeff, MPoly, UPolyT, as_coeff, coeff_exact_div
from gfkit.domain.series import TSeries


@dataclass(frozen=True, eq=False)
class RatFun:
    """num/den with coefficients free of t.

    With rational coefficients the pair is reduced and den(0) = 1 (or den is
    monic when den(0) = 0). With parameters the pair is kept as given.
    """

    num: UPolyT
    den: UPolyT

    def __post_init__(self) -> None:
        if self.den.is_zero:
            raise NotInvertibleError("rational function with zero denominator")
        if not (self.num.is_rational and self.den.is_rational):
            return
        num, den = self.num, self.den
        if num.is_zero:
            num, den = UPolyT(), UPolyT([1])
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num // g, den // g
        scale = den[0] if den[0] else den.leading()
        object.__setattr__(self, "num", UPolyT([c / scale for c in num.coeffs]))
        object.__setattr__(self, "den", UPolyT([c / scale for c in den.coeffs]))

    @classmethod
    def from_mpolys(cls, num: MPoly, den: MPoly, var: str = "t") -> "RatFun":
        return cls(UPolyT.from_mpoly(num, var), UPolyT.from_mpoly(den, var))

    @classmethod
    def parse(cls, text: str, *, source: str = "<input>", line: int = 1, column: int = 1) -> "RatFun":
        num, den = parse_fraction(text, source=source, line=line, column=column)
        return cls.from_mpolys(num, den)

    @classmethod
    def polynomial(cls, p: UPolyT | MPoly) -> "RatFun":
        up = p if isinstance(p, UPolyT) else UPolyT.from_mpoly(p)
        return cls(up, UPolyT([1]))

    # -- inspection ----------------------------------------------------------
    @property
    def is_rational(self) -> bool:
        return self.num.is_rational and self.den.is_rational

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    # -- arithmetic ----------------------------------------------------------
    @staticmethod
    def _coerce(other: object) -> "RatFun | None":
        if isinstance(other, RatFun):
            return other
        if isinstance(other, (int, Fraction, MPoly, UPolyT)):
            return RatFun.polynomial(other if isinstance(other, (UPolyT, MPoly)) else UPolyT([other]))
        return None

    def __add__(self, other: object) -> "RatFun":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFun(self.num + o.num, self.den)
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den)

    def __sub__(self, other: object) -> "RatFun":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "RatFun":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "RatFun":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFun(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "RatFun":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero:
            raise NotInvertibleError("division by the zero rational function")
        return RatFun(self.num * o.den, self.den * o.num)

    def inflate(self, p: int) -> "RatFun":
        """Substitute t -> t^p."""
        return RatFun(self.num.inflate(p), self.den.inflate(p))

    def shift(self, k: int) -> "RatFun":
        return RatFun(self.num.shift(k), self.den)

    def evaluate(self, values) -> "RatFun":
        return RatFun(self.num.evaluate(values), self.den.evaluate(values))

    # -- comparison / text ----------------------------------------------------
    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        num = str(self.num)
        if self.den == UPolyT([1]):
            return num
        den = str(self.den)
        if len(self.num.to_mpoly().terms) > 1:
            num = f"({num})"
        if len(self.den.to_mpoly().terms) > 1 or not self.den.is_rational:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"RatFun({str(self)!r})"

    def to_dict(self) -> dict:
        return {"numerator": str(self.num), "denominator": str(self.den)}


def ratfun_expand(f: RatFun, n: int) -> TSeries:
    """First n+1 Taylor coefficients, by the recurrence the denominator induces."""
    d0 = f.den[0]
    if not d0:
        raise NotInvertibleError("not a power series at 0: the denominator vanishes at t = 0")
    if not isinstance(d0, Fraction):
        raise NotInvertibleError(f"denominator constant term {d0} is not a rational unit")
    q = f.den.degree
    out: list[Coeff] = []
    for k in range(n + 1):
        acc: Coeff = f.num[k]
        for j in range(1, min(k, q) + 1):
            dj = f.den.coeffs[j]
            if dj and out[k - j]:
                acc = acc - dj * out[k - j]
        out.append(coeff_exact_div(as_coeff(acc), d0))
    return TSeries(tuple(out), n)
