"""Infrastructure: file loaders for every gfkit input format.

Every parse failure is reported as an ``InputFormatError`` naming the file,
the 1-based line and the column.  Well-formed text that describes an invalid
object (an edge to a missing vertex, a rule with an undeclared name) is
reported the same way, at the line that introduced it when that is known.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Iterator

from gfkit.domain.automata import Nfa, Transition
from gfkit.domain.catalytic import CatalyticEquation
from gfkit.domain.digraph import WeightedDigraph
from gfkit.domain.errors import ComputationError, InputFormatError, UsageError
from gfkit.domain.expressions import parse_polynomial, parse_rational
from gfkit.domain.laurent import BiRatFun
from gfkit.domain.polynomials import MPoly
from gfkit.domain.posets import HalfspaceSystem, NaturalPoset
from gfkit.domain.ratfun import RatFun
from gfkit.domain.series import TSeries
from gfkit.domain.systems import Cfg, PolySystem, Rule


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _data_lines(text: str) -> Iterator[tuple[int, int, str]]:
    """(line number, column of first character, stripped content), skipping blanks and ``#`` comments."""
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        stripped = content.strip()
        if stripped:
            yield number, len(content) - len(content.lstrip()) + 1, stripped


def _int(token: str, source: str, line: int, column: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputFormatError(f"expected an integer, got {token!r}", source=source, line=line, column=column) from None


def _built(build: Callable[[], Any], source: str, line: int = 1) -> Any:
    try:
        return build()
    except ComputationError as exc:
        raise InputFormatError(str(exc), source=source, line=line) from exc


def _load_json(path: str) -> Any:
    text = _read(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(exc.msg, source=path, line=exc.lineno, column=exc.colno) from exc


def _field(obj: Any, key: str, source: str, default: Any = ...) -> Any:
    if not isinstance(obj, dict):
        raise InputFormatError(f"expected a JSON object around {key!r}", source=source)
    if key not in obj:
        if default is ...:
            raise InputFormatError(f"missing field {key!r}", source=source)
        return default
    return obj[key]


# ---------------------------------------------------------------------------
# Series
# ---------------------------------------------------------------------------
def load_series(path: str) -> TSeries:
    """``order N`` header (optional) then one coefficient per line."""
    order: int | None = None
    values: list[Fraction] = []
    for line, col, text in _data_lines(_read(path)):
        if text.startswith("order"):
            if order is not None or values:
                raise InputFormatError("'order' must be the first data line", source=path, line=line, column=col)
            order = _int(text[len("order"):].strip(), path, line, col + len("order") + 1)
            if order < 0:
                raise InputFormatError("order must be non-negative", source=path, line=line, column=col)
            continue
        values.append(parse_rational(text, source=path, line=line, column=col))
    if not values:
        raise InputFormatError("no coefficients", source=path)
    if order is None:
        order = len(values) - 1
    if len(values) < order + 1:
        raise InputFormatError(f"order {order} needs {order + 1} coefficients, found {len(values)}", source=path)
    return TSeries.of(values[: order + 1], order)


def dump_series(series: TSeries) -> str:
    """Inverse of :func:`load_series` for scalar series."""
    return "\n".join([f"order {series.order}", *series.coefficient_strings()]) + "\n"


# ---------------------------------------------------------------------------
# Single expressions
# ---------------------------------------------------------------------------
def _single_expression(path: str) -> tuple[str, int, int]:
    lines = list(_data_lines(_read(path)))
    if not lines:
        raise InputFormatError("empty file", source=path)
    line, col, _ = lines[0]
    return " ".join(text for _, _, text in lines), line, col


def load_equation(path: str) -> MPoly:
    text, line, col = _single_expression(path)
    return parse_polynomial(text, source=path, line=line, column=col)


def load_ratfun(path: str) -> RatFun:
    text, line, col = _single_expression(path)
    return _built(lambda: RatFun.parse(text, source=path, line=line, column=col), path, line)


def load_catalytic(path: str) -> CatalyticEquation:
    text, line, _ = _single_expression(path)
    return _built(lambda: CatalyticEquation.parse(text, source=path, line=line), path, line)


def load_biratfun(path: str, variables: str = "ts") -> BiRatFun:
    text, line, _ = _single_expression(path)
    return _built(lambda: BiRatFun.parse(text, variables=variables, source=path, line=line), path, line)


# ---------------------------------------------------------------------------
# Digraphs and automata
# ---------------------------------------------------------------------------
def load_digraph(path: str) -> WeightedDigraph:
    data = _load_json(path)
    vertices = _field(data, "vertices", path)
    if not isinstance(vertices, int):
        raise InputFormatError("'vertices' must be an integer", source=path)
    edges = []
    for k, edge in enumerate(_field(data, "edges", path, [])):
        src, dst = _field(edge, "from", path), _field(edge, "to", path)
        if not isinstance(src, int) or not isinstance(dst, int):
            raise InputFormatError(f"edge {k}: 'from' and 'to' must be integers", source=path)
        weight = parse_polynomial(str(_field(edge, "weight", path, "1")), source=f"{path}[edge {k}]")
        edges.append((src, dst, weight))
    return _built(lambda: WeightedDigraph.from_edges(vertices, edges), path)


def load_automaton(path: str) -> Nfa:
    data = _load_json(path)
    transitions = []
    for tr in _field(data, "transitions", path, []):
        multiplicity = _field(tr, "multiplicity", path, 1)
        if not isinstance(multiplicity, int):
            raise InputFormatError("'multiplicity' must be an integer", source=path)
        transitions.append(
            Transition(str(_field(tr, "from", path)), str(_field(tr, "letter", path)), str(_field(tr, "to", path)), multiplicity)
        )
    return _built(
        lambda: Nfa(
            tuple(str(s) for s in _field(data, "states", path)),
            tuple(str(a) for a in _field(data, "alphabet", path)),
            tuple(transitions),
            str(_field(data, "initial", path)),
            frozenset(str(f) for f in _field(data, "finals", path)),
        ),
        path,
    )


# ---------------------------------------------------------------------------
# Posets and cones
# ---------------------------------------------------------------------------
def _integer_rows(path: str) -> tuple[int, list[tuple[int, list[int]]]]:
    lines = list(_data_lines(_read(path)))
    if not lines:
        raise InputFormatError("empty file", source=path)
    line, col, head = lines[0]
    size = _int(head, path, line, col)
    rows = [(ln, [_int(tok, path, ln, c) for tok in text.split()]) for ln, c, text in lines[1:]]
    return size, rows


def load_poset(path: str) -> NaturalPoset:
    k, rows = _integer_rows(path)
    pairs = []
    for line, row in rows:
        if len(row) != 2:
            raise InputFormatError("expected a pair 'i j'", source=path, line=line)
        pairs.append((row[0], row[1]))
    last = rows[-1][0] if rows else 1
    return _built(lambda: NaturalPoset.from_pairs(k, pairs), path, last)


def load_halfspaces(path: str) -> HalfspaceSystem:
    m, rows = _integer_rows(path)
    for line, row in rows:
        if len(row) != m:
            raise InputFormatError(f"expected {m} coefficients, got {len(row)}", source=path, line=line)
    return _built(lambda: HalfspaceSystem(m, tuple(tuple(r) for _, r in rows)), path)


# ---------------------------------------------------------------------------
# Systems and grammars
# ---------------------------------------------------------------------------
def load_system(path: str) -> PolySystem:
    pairs = []
    for line, col, text in _data_lines(_read(path)):
        name, sep, rhs = text.partition("=")
        if not sep or not name.strip().isidentifier():
            raise InputFormatError("expected 'NAME = polynomial'", source=path, line=line, column=col)
        rhs_col = col + len(name) + 1 + (len(rhs) - len(rhs.lstrip()))
        pairs.append((name.strip(), parse_polynomial(rhs.strip(), source=path, line=line, column=rhs_col)))
    if not pairs:
        raise InputFormatError("no equations", source=path)
    return _built(lambda: PolySystem.of(pairs), path)


def load_grammar(path: str) -> Cfg:
    start: str | None = None
    letters: list[str] | None = None
    heads: list[str] = []
    rules: list[Rule] = []
    for line, col, text in _data_lines(_read(path)):
        keyword, _, rest = text.partition(" ")
        if keyword == "start":
            start = rest.strip()
            continue
        if keyword == "letters":
            letters = rest.split()
            continue
        head, sep, bodies = text.partition("->")
        head = head.strip()
        if not sep or not head:
            raise InputFormatError("expected 'HEAD -> body | body'", source=path, line=line, column=col)
        if head not in heads:
            heads.append(head)
        for body in bodies.split("|"):
            symbols = tuple(body.split())
            if not symbols:
                raise InputFormatError(f"empty alternative for {head}", source=path, line=line, column=col)
            rules.append(Rule(head, symbols))
    if not rules:
        raise InputFormatError("no rules", source=path)
    start = start or heads[0]
    if start not in heads:
        raise InputFormatError(f"start symbol {start!r} has no rules", source=path)
    if letters is None:
        letters = sorted({x for r in rules for x in r.body if x not in heads})
    symbols = (start, *(h for h in heads if h != start))
    return _built(lambda: Cfg(symbols, tuple(letters), tuple(rules)), path)


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------
def load_matrix(path: str) -> list[list[MPoly]]:
    """One row per line, entries separated by commas."""
    rows: list[list[MPoly]] = []
    for line, col, text in _data_lines(_read(path)):
        row = []
        offset = 0
        for entry in text.split(","):
            lead = len(entry) - len(entry.lstrip())
            row.append(parse_polynomial(entry.strip(), source=path, line=line, column=col + offset + lead))
            offset += len(entry) + 1
        rows.append(row)
    for line, row in enumerate(rows, start=1):
        if len(row) != len(rows):
            raise InputFormatError(f"matrix is not square: row {line} has {len(row)} entries, expected {len(rows)}", source=path)
    return rows


LOADERS: dict[str, Callable[[str], Any]] = {
    "automaton": load_automaton,
    "digraph": load_digraph,
    "grammar": load_grammar,
    "system": load_system,
    "equation": load_equation,
    "catalytic": load_catalytic,
    "ratfun": load_ratfun,
    "poset": load_poset,
    "cone": load_halfspaces,
}
