"""Text formats for ideals, generator orderings, posets, graphs and Gröbner bases.

Ideal files start with ``vars: x1 x2 ...`` followed by one monomial per line, written as space separated factors
``name`` or ``name^e``. Blank lines and ``#`` comments are ignored everywhere.
"""

import dataclasses
import re
from collections.abc import Iterable, Sequence

from ._exceptions import DepthLabException, ParseError
from .constructions.graphs import Graph
from .constructions.posets import Poset
from .monomials import Monomial, MonomialIdeal, VariableSet
from .rees.groebner import GroebnerBasis

_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^([0-9]+))?$")
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


@dataclasses.dataclass(frozen=True)
class _Line:
    number: int
    text: str
    """Content without the comment, trailing spaces removed"""
    indent: int
    """0-based column of the first character of ``text``"""


def _content_lines(text: str) -> list[_Line]:
    result = []
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        stripped = body.lstrip()
        if stripped:
            result.append(_Line(number, stripped, len(body) - len(stripped)))
    return result


def _tokens(line: _Line, start: int = 0) -> list[tuple[str, int]]:
    """Whitespace separated tokens of ``line.text[start:]`` with their 1-based columns."""
    return [
        (m.group(0), line.indent + start + m.start() + 1) for m in re.finditer(r"\S+", line.text[start:])
    ]


def _header(line: _Line, key: str) -> int:
    """Checks that ``line`` starts with ``key:`` and returns the offset of the value."""
    prefix = f"{key}:"
    if not line.text.startswith(prefix):
        raise ParseError(f"expected '{prefix}'", line.number, line.indent + 1)
    return len(prefix)


def format_monomial(u: Monomial, names: Sequence[str]) -> str:
    """``x1^2 x3`` style text, ``1`` for the unit monomial."""
    factors = [name if a == 1 else f"{name}^{a}" for name, a in zip(names, u) if a]
    return " ".join(factors) or "1"


def parse_monomial(text: str, ambient: VariableSet, line: int = 1, column: int = 1) -> Monomial:
    """Parses a monomial given on one line; ``column`` is where ``text`` starts."""
    return _parse_monomial(_Line(line, text.strip(), column - 1 + len(text) - len(text.lstrip())), ambient)


def _parse_monomial(line: _Line, ambient: VariableSet) -> Monomial:
    exponents = [0] * ambient.n
    tokens = _tokens(line)
    if [t for t, _ in tokens] == ["1"]:
        return tuple(exponents)
    for token, column in tokens:
        match = _FACTOR.match(token)
        if not match:
            raise ParseError(f"malformed factor '{token}'", line.number, column)
        name, power = match.group(1), match.group(2)
        if name not in ambient.names:
            raise ParseError(f"unknown variable '{name}'", line.number, column)
        exponents[ambient.index(name)] += int(power) if power is not None else 1
    return tuple(exponents)


def _parse_vars(line: _Line) -> VariableSet:
    offset = _header(line, "vars")
    tokens = _tokens(line, offset)
    if not tokens:
        raise ParseError("no variables declared", line.number, line.indent + offset + 1)
    seen = set()
    for name, column in tokens:
        if not _NAME.match(name):
            raise ParseError(f"invalid variable name '{name}'", line.number, column)
        if name in seen:
            raise ParseError(f"duplicate variable '{name}'", line.number, column)
        seen.add(name)
    return VariableSet(name for name, _ in tokens)


def _parse_monomial_list(text: str) -> tuple[VariableSet, list[tuple[Monomial, int]]]:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input, expected 'vars:'", 1, 1)
    ambient = _parse_vars(lines[0])
    monomials = [(_parse_monomial(line, ambient), line.number) for line in lines[1:]]
    return ambient, monomials


def parse_ideal(text: str) -> MonomialIdeal:
    """Reads an ideal file; generators are minimalized and put in canonical order.

    :raises ParseError: with the 1-based line and column of the first problem.
    """
    ambient, monomials = _parse_monomial_list(text)
    try:
        return MonomialIdeal(ambient, (u for u, _ in monomials))
    except OverflowError as e:
        raise ParseError(str(e), monomials[-1][1] if monomials else 1, 1) from e


def format_ideal(i: MonomialIdeal, comment: str | None = None) -> str:
    """Text form of ``I``; ``parse_ideal`` gives back an equal ideal and formatting it again is byte-identical."""
    lines = [f"# {comment}"] if comment else []
    lines.append("vars: " + " ".join(i.ambient.names))
    lines.extend(format_monomial(u, i.ambient.names) for u in i.gens)
    return "\n".join(lines) + "\n"


def parse_ordering(text: str, ambient: VariableSet) -> tuple[Monomial, ...]:
    """Generator order file: an optional ``vars:`` header equal to ``ambient``, then monomials in order."""
    lines = _content_lines(text)
    if lines and lines[0].text.startswith("vars:"):
        declared = _parse_vars(lines[0])
        if declared != ambient:
            raise ParseError("variables differ from the ideal", lines[0].number, lines[0].indent + 1)
        lines = lines[1:]
    return tuple(_parse_monomial(line, ambient) for line in lines)


def format_ordering(ordering: Iterable[Monomial], ambient: VariableSet) -> str:
    lines = ["vars: " + " ".join(ambient.names)]
    lines.extend(format_monomial(u, ambient.names) for u in ordering)
    return "\n".join(lines) + "\n"


def parse_poset(text: str) -> Poset:
    """Poset file: ``elements: p1 p2 ...`` followed by ``cover: pi < pj`` lines."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input, expected 'elements:'", 1, 1)
    offset = _header(lines[0], "elements")
    names = [name for name, _ in _tokens(lines[0], offset)]
    if not names:
        raise ParseError("no elements declared", lines[0].number, lines[0].indent + offset + 1)
    covers = []
    for line in lines[1:]:
        offset = _header(line, "cover")
        tokens = _tokens(line, offset)
        if len(tokens) != 3 or tokens[1][0] != "<":
            column = tokens[0][1] if tokens else line.indent + offset + 1
            raise ParseError("expected 'cover: a < b'", line.number, column)
        pair = []
        for name, column in (tokens[0], tokens[2]):
            if name not in names:
                raise ParseError(f"unknown element '{name}'", line.number, column)
            pair.append(names.index(name))
        covers.append(tuple(pair))
    try:
        return Poset(names, covers)
    except DepthLabException as e:
        raise ParseError(e.info or e.reason, lines[0].number, 1) from e


def format_poset(p: Poset) -> str:
    lines = ["elements: " + " ".join(p.names)]
    lines.extend(f"cover: {p.names[a]} < {p.names[b]}" for a, b in p.cover_relations())
    return "\n".join(lines) + "\n"


def _parse_int(token: str, line: int, column: int) -> int:
    if not token.isdigit():
        raise ParseError(f"expected a positive integer, got '{token}'", line, column)
    return int(token)


def parse_graph(text: str) -> Graph:
    """Graph file: ``vertices: n`` followed by ``edge: i j`` lines, vertices numbered from 1."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input, expected 'vertices:'", 1, 1)
    offset = _header(lines[0], "vertices")
    tokens = _tokens(lines[0], offset)
    if len(tokens) != 1:
        raise ParseError("expected one vertex count", lines[0].number, lines[0].indent + offset + 1)
    n = _parse_int(tokens[0][0], lines[0].number, tokens[0][1])
    edges = []
    for line in lines[1:]:
        offset = _header(line, "edge")
        tokens = _tokens(line, offset)
        if len(tokens) != 2:
            raise ParseError("expected 'edge: i j'", line.number, line.indent + offset + 1)
        ends = []
        for token, column in tokens:
            v = _parse_int(token, line.number, column)
            if not 1 <= v <= n:
                raise ParseError(f"vertex {v} outside 1..{n}", line.number, column)
            ends.append(v - 1)
        if ends[0] == ends[1]:
            raise ParseError("loops are not allowed", line.number, tokens[1][1])
        edges.append(tuple(ends))
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"vertices: {g.n}"]
    lines.extend(f"edge: {a + 1} {b + 1}" for a, b in g.sorted_edges())
    return "\n".join(lines) + "\n"


def format_groebner(gb: GroebnerBasis, i: MonomialIdeal) -> str:
    """One ``lead - trail`` line per basis element after a ``y`` legend naming the generator behind each ``y``."""
    variables = gb.order.variables
    names = variables.names
    lines = [
        "vars: " + " ".join(names),
        f"# order: {gb.order.describe()}",
    ]
    lines.extend(
        f"# {variables.y_prefix}{j} = {format_monomial(u, i.ambient.names)}" for j, u in enumerate(i.gens, start=1)
    )
    lines.extend(f"{format_monomial(g.lead, names)} - {format_monomial(g.trail, names)}" for g in gb.elements)
    return "\n".join(lines) + "\n"
