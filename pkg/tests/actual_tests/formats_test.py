import pytest

from depthlab import MonomialIdeal, ParseError, VariableSet
from depthlab.constructions import chain_poset, net_graph, ordinal_sum
from depthlab.formats import (
    format_graph,
    format_groebner,
    format_ideal,
    format_monomial,
    format_ordering,
    format_poset,
    parse_graph,
    parse_ideal,
    parse_monomial,
    parse_ordering,
    parse_poset,
)
from depthlab.rees import YOrder, edge_ideal_y_order, rees_groebner

from ..conftest import ideal


def test_ideal_text(triangle):
    text = format_ideal(triangle)
    assert text == "vars: x1 x2 x3\nx1 x2\nx1 x3\nx2 x3\n"
    assert parse_ideal(text) == triangle
    assert format_ideal(parse_ideal(text)) == text
    assert format_ideal(triangle, comment="triangle").startswith("# triangle\nvars:")


def test_ideal_comments_and_minimalization():
    i = parse_ideal("# two generators\nvars: x y\nx^2 y   # dropped\n\n  y\nx^2\n")
    assert i.gens == ((0, 1), (2, 0))
    assert parse_ideal("vars: a b\n1\n").is_unit
    assert parse_ideal("vars: a b\n").is_zero


def test_monomial_text():
    ambient = VariableSet.standard(3)
    assert parse_monomial("x1^2 x3", ambient) == (2, 0, 1)
    assert parse_monomial("x1 x1", ambient) == (2, 0, 0)
    assert format_monomial((2, 0, 1), ambient.names) == "x1^2 x3"
    assert format_monomial((0, 0, 0), ambient.names) == "1"


@pytest.mark.parametrize(
    "text, line, column, message",
    (
        ("vars: x y\nx z\n", 2, 3, "unknown variable 'z'"),
        ("vars: x y\n  x^\n", 2, 3, "malformed factor 'x^'"),
        ("vars: x x\n", 1, 9, "duplicate variable 'x'"),
        ("x y\n", 1, 1, "expected 'vars:'"),
        ("# nothing\n\n", 1, 1, "empty input"),
        ("vars:\n", 1, 6, "no variables declared"),
        ("vars: x 2y\n", 1, 9, "invalid variable name '2y'"),
    ),
)
def test_ideal_parse_errors(text, line, column, message):
    with pytest.raises(ParseError) as e:
        parse_ideal(text)
    assert (e.value.line, e.value.column) == (line, column)
    assert message in e.value.info
    assert f"[Parse error at {line}:{column}]" in str(e.value)


def test_exponent_overflow():
    with pytest.raises(ParseError) as e:
        parse_ideal(f"vars: x y\nx\ny^{2**62}\n")
    assert e.value.line == 3
    assert isinstance(e.value.__cause__, OverflowError)


def test_ordering_text(triangle):
    ordering = ((0, 1, 1), (1, 1, 0), (1, 0, 1))
    text = format_ordering(ordering, triangle.ambient)
    assert parse_ordering(text, triangle.ambient) == ordering
    assert parse_ordering("x2 x3\nx1 x2\n", triangle.ambient) == ordering[:2]
    with pytest.raises(ParseError) as e:
        parse_ordering("vars: x1 x2\nx1 x2\n", triangle.ambient)
    assert "variables differ" in e.value.info


def test_graph_text():
    g = net_graph()
    text = format_graph(g)
    assert text.splitlines()[:2] == ["vertices: 6", "edge: 1 4"]
    assert parse_graph(text) == g
    assert parse_graph("vertices: 3\n edge: 3 1 # comment\n").sorted_edges() == [(0, 2)]


@pytest.mark.parametrize(
    "text, line, column",
    (
        ("vertices: 3\nedge: 1 4\n", 2, 9),
        ("vertices: 3\nedge: 2 2\n", 2, 9),
        ("vertices: 3\nedge: 1\n", 2, 6),
        ("vertices: x\n", 1, 11),
        ("edge: 1 2\n", 1, 1),
    ),
)
def test_graph_parse_errors(text, line, column):
    with pytest.raises(ParseError) as e:
        parse_graph(text)
    assert (e.value.line, e.value.column) == (line, column)


def test_poset_text():
    p = ordinal_sum([2, 1])
    text = format_poset(p)
    assert text == "elements: p1 p2 p3\ncover: p1 < p3\ncover: p2 < p3\n"
    assert parse_poset(text).cover_relations() == p.cover_relations()
    q = parse_poset("elements: a b c\ncover: a < b\ncover: b < c\ncover: a < c\n")
    assert q.cover_relations() == chain_poset(3).cover_relations()
    assert q.names == ("a", "b", "c")


@pytest.mark.parametrize(
    "text, line, column",
    (
        ("elements: a b\ncover: a < b\ncover: b < a\n", 1, 1),
        ("elements: a b\ncover: a < c\n", 2, 12),
        ("elements: a b\ncover: a > b\n", 2, 8),
        ("cover: a < b\n", 1, 1),
    ),
)
def test_poset_parse_errors(text, line, column):
    with pytest.raises(ParseError) as e:
        parse_poset(text)
    assert (e.value.line, e.value.column) == (line, column)


def test_groebner_text(net):
    gb = rees_groebner(net, YOrder.REVLEX, edge_ideal_y_order(net, range(6)))
    lines = format_groebner(gb, net).splitlines()
    assert len(lines) == 20
    assert lines[0] == "vars: y1 y2 y3 y4 y5 y6 x1 x2 x3 x4 x5 x6"
    assert lines[1].startswith("# order: revlex(y1 > y2")
    assert "# y1 = x1 x4" in lines
    assert "# y6 = x5 x6" in lines
    assert all(" - " in line for line in lines[8:])


def test_round_trip_keeps_ambient():
    i = ideal(4, [1, 1], [4])
    parsed = parse_ideal(format_ideal(i))
    assert parsed.ambient == i.ambient
    assert isinstance(parsed, MonomialIdeal)
