import random

import pytest

from depthlab import ResourceLimitError, UnsupportedInputError, VariableSet
from depthlab.formats import parse_monomial
from depthlab.monomials import mul, power
from depthlab.oracle import DepthProfile
from depthlab.rees import (
    Binomial,
    ReesVariableSet,
    TermOrder,
    YOrder,
    analytic_spread,
    buchberger,
    depth_lower_bounds,
    edge_ideal_y_order,
    initial_ideal,
    rees_groebner,
    rees_kernel,
    rees_projection_is_zero,
    rho,
    spread_bound_check,
    standard_expression,
    standard_expression_order,
    standard_order_certificate,
    x_condition,
)

from ..conftest import ideal

NET_INITIAL = (
    "x5 y1",
    "x4 y2",
    "x5 y3",
    "x6 y4",
    "x5 y5",
    "x4 y3",
    "x6 y2",
    "x6 y1",
    "x1 y4 y5",
    "x2 y3 y4",
    "x1 y3 y4",
    "x1 y2 y5",
)


@pytest.fixture(scope="module")
def net_gb(net):
    return rees_groebner(net, YOrder.REVLEX, edge_ideal_y_order(net, range(6)))


def y_monomial(text: str, m: int) -> tuple[int, ...]:
    y = [0] * m
    for token in text.split():
        y[int(token[1:]) - 1] += 1
    return tuple(y)


def test_variables_and_order():
    variables = ReesVariableSet(ideal(2, [1], [2]).ambient, 2)
    assert variables.names == ("y1", "y2", "x1", "x2")
    assert variables.split((1, 0, 0, 1)) == (0, (1, 0), (0, 1))
    assert variables.join((0, 1), (1, 0)) == (0, 1, 1, 0)
    lex = TermOrder(variables)
    assert lex.greater((1, 0, 0, 0), (0, 1, 5, 5))
    assert lex.greater((0, 1, 1, 0), (0, 1, 0, 1))
    revlex = TermOrder(variables, YOrder.REVLEX)
    assert revlex.greater((0, 2, 0, 0), (1, 0, 0, 0))
    assert revlex.describe() == "revlex(y1 > y2) >> lex(x1 > x2)"
    assert lex.with_elimination().describe() == "t >> lex(y1 > y2) >> lex(x1 > x2)"
    with pytest.raises(ValueError):
        TermOrder(variables, YOrder.LEX, (0, 0))


def test_y_prefix_avoids_base_names():
    assert ReesVariableSet(VariableSet(["y1", "y2"]), 2).y_prefix == "w"
    assert ReesVariableSet(VariableSet(["x1", "w1"]), 2).y_prefix == "y"


def test_buchberger_small():
    variables = ReesVariableSet(ideal(2, [1], [2]).ambient, 2)
    order = TermOrder(variables)
    gb = buchberger([Binomial((1, 0, 0, 1), (0, 1, 1, 0))], order)
    assert len(gb) == 1
    assert gb.is_reduced()
    assert gb.normal_form((2, 0, 0, 1)) == (1, 1, 1, 0)
    assert gb.stats["size"] == 1
    assert Binomial.oriented((1, 0, 0, 0), (1, 0, 0, 0), order) is None


def test_maximal_ideal_kernel():
    m = ideal(2, [1], [2])
    gb = rees_groebner(m)
    assert [(g.lead, g.trail) for g in gb] == [((1, 0, 0, 1), (0, 1, 1, 0))]
    assert rees_kernel(m) == gb.elements
    assert x_condition(gb)
    assert rho(gb, (1, 0)) == 1
    assert rho(gb, (0, 1)) == 0
    bounds = depth_lower_bounds(gb, 2)
    assert bounds.per_power == (0, 0)
    assert bounds.c == (1, 0)


def test_principal_ideal_has_empty_kernel():
    gb = rees_groebner(ideal(3, [1, 2]))
    assert len(gb) == 0
    assert x_condition(gb)
    bounds = depth_lower_bounds(gb, 3)
    assert bounds.per_power == (2, 2, 2)
    assert bounds.reported_limit == 2


def test_rees_errors():
    with pytest.raises(UnsupportedInputError):
        rees_groebner(ideal(2))
    with pytest.raises(ResourceLimitError) as e:
        rees_groebner(ideal(4, [1, 2], [1, 3], [2, 4], [3, 4], [2, 3]), cap=1)
    assert e.value.cap_name == "buchberger"
    assert "reductions" in e.value.stats


def test_net_y_order(net):
    assert net.gens == (
        (1, 0, 0, 1, 0, 0),
        (0, 1, 0, 0, 1, 0),
        (0, 0, 1, 0, 0, 1),
        (0, 0, 0, 1, 1, 0),
        (0, 0, 0, 1, 0, 1),
        (0, 0, 0, 0, 1, 1),
    )
    assert edge_ideal_y_order(net, range(6)) == (0, 1, 2, 3, 4, 5)
    assert edge_ideal_y_order(net, [5, 4, 3, 2, 1, 0]) == (5, 4, 2, 3, 1, 0)
    with pytest.raises(ValueError):
        edge_ideal_y_order(net, [0, 1])
    with pytest.raises(UnsupportedInputError):
        edge_ideal_y_order(ideal(2, [1, 1], [1, 2]), [0, 1])


def test_net_initial_ideal(net_gb):
    variables = net_gb.order.variables.as_variable_set()
    expected = {parse_monomial(text, variables) for text in NET_INITIAL}
    assert set(initial_ideal(net_gb).gens) == expected
    assert len(net_gb) == 12
    assert net_gb.is_reduced()
    assert x_condition(net_gb)


def test_net_kernel_maps_to_zero(net, net_gb):
    assert all(rees_projection_is_zero(net, g) for g in net_gb)
    assert not any(sum(g.lead[6:]) == 0 and sum(g.trail[6:]) == 0 for g in net_gb)


def test_net_rho(net_gb):
    expected = {"y1": 2, "y2": 2, "y3": 2, "y4": 1, "y5": 1, "y6": 0, "y3 y4": 5, "y1 y2 y3 y4 y5": 5}
    for text, value in expected.items():
        assert rho(net_gb, y_monomial(text, 6)) == value, text
    with pytest.raises(ValueError):
        rho(net_gb, (1, 0))


def test_net_bounds(lab_q, net_gb):
    bounds = depth_lower_bounds(net_gb, 3)
    assert bounds.per_power == (3, 0, 0)
    assert [bounds.reported(k) for k in (1, 2, 3)] == [3, 0, 0]
    assert bounds.c == (1, 1, 1, 1, 1, 0)
    assert bounds.limit == 0
    assert bounds.reported_limit == 0
    assert lab_q.toric.bounds(net_gb).per_power == (3, 0, 0)


def test_net_lex_differs(net, net_gb):
    lex = rees_groebner(net, YOrder.LEX, edge_ideal_y_order(net, range(6)))
    assert set(initial_ideal(lex).gens) != set(initial_ideal(net_gb).gens)


@pytest.mark.parametrize("k", (1, 2, 3))
def test_net_standard_order(net, net_gb, k):
    order = standard_expression_order(net, k, net_gb)
    assert sorted(order) == sorted(power(net, k).gens)
    cert = standard_order_certificate(net, k, net_gb)
    assert cert.valid
    keys = [net_gb.order.y_key(standard_expression(net, w, k, net_gb)) for w in order]
    assert keys == sorted(keys)


def test_standard_expression_is_standard(net, net_gb):
    w = (1, 0, 0, 1, 1, 1)
    y = standard_expression(net, w, 2, net_gb)
    assert sum(y) == 2
    assert not net_gb.in_initial_ideal(y + (0,) * 6)


def test_x_condition_fails():
    # x2^2 y1 - x1^2 y2
    squares = ideal(2, [1, 1], [2, 2])
    gb = rees_groebner(squares)
    assert len(gb) == 1
    assert not x_condition(gb)
    with pytest.raises(UnsupportedInputError):
        depth_lower_bounds(gb, 2)
    with pytest.raises(UnsupportedInputError):
        standard_expression_order(squares, 2, gb)


def test_analytic_spread(net, triangle):
    assert analytic_spread(net) == 6
    assert analytic_spread(triangle) == 3
    assert analytic_spread(ideal(4, [1, 2], [2, 3], [3, 4])) == 3
    with pytest.raises(UnsupportedInputError):
        analytic_spread(ideal(3, [1], [2, 3]))


def test_spread_bound(lab_q, net, triangle):
    check = spread_bound_check(net, 3, DepthProfile.from_values([3, 0, 0]))
    assert (check.spread, check.bound, check.min_depth, check.tail) == (6, 0, 0, 0)
    assert check.ok and check.tight
    check = lab_q.toric.spread_check(triangle)
    assert check.bound == 0
    assert check.ok


@pytest.mark.parametrize("y_order", list(YOrder))
@pytest.mark.parametrize("with_t", (False, True))
def test_term_order_axioms(y_order, with_t):
    rng = random.Random(2009)
    variables = ReesVariableSet(VariableSet.standard(3), 4, with_t)
    priority = list(range(4))
    rng.shuffle(priority)
    order = TermOrder(variables, y_order, tuple(priority))
    one = (0,) * variables.size

    def monomial() -> tuple[int, ...]:
        return tuple(rng.randint(0, 3) for _ in range(variables.size))

    for _ in range(1000):
        u, v, w = monomial(), monomial(), monomial()
        if u != v:
            assert order.key(u) != order.key(v)
            assert order.greater(u, v) != order.greater(v, u)
        if order.greater(u, v):
            assert order.greater(mul(u, w), mul(v, w))
        if u != one:
            assert order.greater(u, one)
