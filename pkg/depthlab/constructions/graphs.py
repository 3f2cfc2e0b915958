"""Simple graphs, their edge ideals and chordality of complements."""

import dataclasses
import itertools
import random
from collections.abc import Iterable

from .._exceptions import EmptyIdealError, InvalidSpecError
from ..monomials import MonomialIdeal, VariableSet


@dataclasses.dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0..n-1``; every edge is stored as ``(i, j)`` with ``i < j``."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise InvalidSpecError("vertex count", info=f"graph needs at least one vertex, got {n}")
        canonical = set()
        for a, b in edges:
            if a == b:
                raise InvalidSpecError("no loops", info=f"loop at vertex {a + 1}")
            if not (0 <= a < n and 0 <= b < n):
                raise InvalidSpecError("vertex range", info=f"edge ({a + 1}, {b + 1}) outside 1..{n}")
            canonical.add((min(a, b), max(a, b)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(canonical))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbours(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def adjacent(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def __repr__(self):
        return f"<{self.__class__.__name__} n={self.n} edges={len(self.edges)}>"


def edge_ideal(g: Graph, ambient: VariableSet | None = None) -> MonomialIdeal:
    """``I(G)`` generated by ``x_i x_j`` for every edge."""
    if not g.edges:
        raise EmptyIdealError(info="graph has no edges")
    ambient = ambient or VariableSet.standard(g.n)
    gens = []
    for a, b in g.edges:
        u = [0] * g.n
        u[a] = u[b] = 1
        gens.append(tuple(u))
    return MonomialIdeal(ambient, gens)


def complement(g: Graph) -> Graph:
    return Graph(g.n, (e for e in itertools.combinations(range(g.n), 2) if e not in g.edges))


def maximum_cardinality_search(g: Graph) -> list[int]:
    """Visit order of maximum cardinality search, ties go to the lowest vertex index."""
    weight = [0] * g.n
    visited: list[int] = []
    left = set(range(g.n))
    while left:
        v = min(left, key=lambda x: (-weight[x], x))
        visited.append(v)
        left.discard(v)
        for u in g.neighbours(v) & left:
            weight[u] += 1
    return visited


def is_perfect_elimination_ordering(g: Graph, ordering: list[int]) -> bool:
    """Every vertex forms a clique together with its neighbours that come later in ``ordering``."""
    position = {v: k for k, v in enumerate(ordering)}
    for v in ordering:
        later = [u for u in g.neighbours(v) if position[u] > position[v]]
        if any(not g.adjacent(a, b) for a, b in itertools.combinations(later, 2)):
            return False
    return True


def is_chordal(g: Graph) -> tuple[bool, list[int] | None]:
    """Returns the verdict and, for chordal graphs, a perfect elimination ordering."""
    ordering = list(reversed(maximum_cardinality_search(g)))
    if is_perfect_elimination_ordering(g, ordering):
        return True, ordering
    return False, None


def net_graph() -> Graph:
    """Triangle ``{4, 5, 6}`` with the pendant edges ``{1, 4}``, ``{2, 5}``, ``{3, 6}``."""
    return Graph(6, [(0, 3), (1, 4), (2, 5), (3, 4), (3, 5), (4, 5)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, ((k, (k + 1) % n) for k in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, (e for e in itertools.combinations(range(n), 2) if rng.random() < p))


def random_chordal_complement_graph(n: int, rng: random.Random, attempts: int = 1000) -> Graph:
    """Random graph with at least one edge whose complement is chordal."""
    for _ in range(attempts):
        g = random_graph(n, rng.choice((0.4, 0.5, 0.6, 0.7)), rng)
        if g.edges and is_chordal(complement(g))[0]:
            return g
    raise InvalidSpecError("chordal complement", info=f"no sample found in {attempts} attempts for n={n}")
