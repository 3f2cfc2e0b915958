from os import environ

import pytest

from depthlab import DepthLab, MonomialIdeal, VariableSet
from depthlab.constructions import edge_ideal, net_graph

FIELDS = ("q",) if environ.get("SKIP_MODULAR_TESTS", False) else ("q", "p:32003")
SKIP_SLOW = bool(environ.get("SKIP_SLOW_TESTS", False))

LABS = {field: DepthLab(field=field, kmax=3) for field in FIELDS}


def ideal(n: int, *gens) -> MonomialIdeal:
    """Builds an ideal in ``x1..xn`` from exponent tuples or from lists of 1-based variable indices."""
    ambient = VariableSet.standard(n)
    monomials = []
    for g in gens:
        if isinstance(g, tuple):
            monomials.append(g)
        else:
            u = [0] * n
            for v in g:
                u[v - 1] += 1
            monomials.append(tuple(u))
    return MonomialIdeal(ambient, monomials)


@pytest.fixture(scope="session")
def lab_q() -> DepthLab:
    return LABS["q"]


@pytest.fixture(scope="session")
def lab(request) -> DepthLab:
    """Marks a test to run for every homology field."""
    return request.param


@pytest.fixture(scope="session")
def net() -> MonomialIdeal:
    """Edge ideal of the triangle with three pendant edges."""
    return edge_ideal(net_graph())


@pytest.fixture(scope="session")
def triangle() -> MonomialIdeal:
    return ideal(3, [1, 2], [1, 3], [2, 3])


def pytest_generate_tests(metafunc):
    if "lab" in metafunc.fixturenames:
        metafunc.parametrize("lab", [LABS[f] for f in FIELDS], ids=list(FIELDS))


def pytest_collection_modifyitems(items):
    for item in items:
        if SKIP_SLOW and item.get_closest_marker("slow"):
            item.add_marker(pytest.mark.skip(reason="SKIP_SLOW_TESTS is set"))
