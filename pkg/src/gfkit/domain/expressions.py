"""Text <-> polynomial conversion.

Polynomial and rational-function strings follow sympy syntax, with ``^``
accepted as power. Every identifier is a plain symbol, so names sympy would
otherwise treat specially (``S``, ``E``, ``I``, ``N``, ``Q``) are safe as
variables.
"""

from __future__ import annotations

import re
from fractions import Fraction

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from gfkit.domain.errors import InputFormatError
from gfkit.domain.polynomials import MPoly

_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_ALLOWED = re.compile(r"[A-Za-z_0-9+\-*/^() \t]")
_DECIMAL = re.compile(r"\d*\.\d")
_TRANSFORMS = standard_transformations + (convert_xor,)


def _fail(message: str, source: str, line: int, column: int) -> InputFormatError:
    return InputFormatError(message, source=source, line=line, column=column)


def _precheck(text: str, source: str, line: int, col0: int) -> None:
    if not text.strip():
        raise _fail("empty expression", source, line, col0)
    m = _DECIMAL.search(text)
    if m:
        raise _fail("decimal literals are not exact; write p/q", source, line, col0 + m.start())
    depth = 0
    for i, ch in enumerate(text):
        if not _ALLOWED.match(ch):
            raise _fail(f"unexpected character {ch!r}", source, line, col0 + i)
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise _fail("unbalanced ')'", source, line, col0 + i)
    if depth:
        raise _fail("missing ')'", source, line, col0 + len(text))


def parse_sympy(text: str, *, source: str = "<input>", line: int = 1, column: int = 1) -> sympy.Expr:
    """Parse *text* into a sympy expression with every identifier a Symbol."""
    _precheck(text, source, line, column)
    names = {name: sympy.Symbol(name) for name in _IDENT.findall(text)}
    try:
        expr = parse_expr(text, local_dict=names, transformations=_TRANSFORMS, evaluate=True)
    except (SyntaxError, TypeError, ValueError, sympy.SympifyError) as exc:
        raise _fail(f"cannot parse expression: {exc.__class__.__name__}", source, line, column) from exc
    if not isinstance(expr, sympy.Expr):
        raise _fail("not an arithmetic expression", source, line, column)
    return expr


def sympy_to_mpoly(expr: sympy.Expr, *, source: str = "<input>", line: int = 1, column: int = 1) -> MPoly:
    expr = sympy.expand(expr)
    syms = sorted(expr.free_symbols, key=lambda s: s.name)
    if not expr.is_polynomial(*syms):
        raise _fail(f"not a polynomial: {expr}", source, line, column)
    if not syms:
        return MPoly.const(_to_fraction(expr, source, line, column))
    poly = sympy.Poly(expr, *syms, domain=sympy.QQ)
    terms = {}
    for exps, coeff in poly.terms():
        mono = tuple((s.name, e) for s, e in zip(syms, exps) if e)
        terms[mono] = _to_fraction(coeff, source, line, column)
    return MPoly(terms)


def _to_fraction(value, source: str, line: int, column: int) -> Fraction:
    value = sympy.nsimplify(value) if isinstance(value, sympy.Float) else value
    if not value.is_rational:
        raise _fail(f"coefficient {value} is not rational", source, line, column)
    q = sympy.Rational(value)
    return Fraction(int(q.p), int(q.q))


def parse_polynomial(text: str, *, source: str = "<input>", line: int = 1, column: int = 1) -> MPoly:
    return sympy_to_mpoly(parse_sympy(text, source=source, line=line, column=column),
                          source=source, line=line, column=column)


def parse_fraction(text: str, *, source: str = "<input>", line: int = 1, column: int = 1) -> tuple[MPoly, MPoly]:
    """Parse a rational expression into (numerator, denominator) polynomials."""
    expr = sympy.together(parse_sympy(text, source=source, line=line, column=column))
    num, den = sympy.fraction(expr)
    kw = dict(source=source, line=line, column=column)
    den_poly = sympy_to_mpoly(den, **kw)
    if den_poly.is_zero:
        raise _fail("zero denominator", source, line, column)
    return sympy_to_mpoly(num, **kw), den_poly


def parse_rational(text: str, *, source: str = "<input>", line: int = 1, column: int = 1) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise _fail(f"not a rational number: {text.strip()!r}", source, line, column) from exc


def mpoly_to_sympy(p: MPoly) -> sympy.Expr:
    total = sympy.Integer(0)
    for mono, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for v, e in mono:
            term *= sympy.Symbol(v) ** e
        total += term
    return total
