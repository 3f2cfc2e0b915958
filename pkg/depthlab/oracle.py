"""Multigraded Betti numbers of monomial ideals from upper Koszul simplicial complexes.

For a multidegree ``a`` the complex ``K^a(I)`` has the faces ``W`` with ``x^(a - e_W)`` in ``I``, and
``β_{i,a}(I)`` is the rank of its reduced homology in dimension ``i - 1``. Only elements of the lcm lattice
can carry nonzero Betti numbers, and a complex whose facets share a vertex is a cone, so those are skipped.
"""

import dataclasses
import logging
from collections import defaultdict

import numpy as np

from ._exceptions import ResourceLimitError, UndefinedDimensionError, UnsupportedInputError
from .homology import RATIONALS, HomologyField, SimplicialComplex, reduced_homology
from .monomials import (
    Monomial,
    MonomialIdeal,
    divides,
    generating_degree,
    krull_dim_quotient,
    lcm_lattice,
    power,
)

LOGGER = logging.getLogger("depthlab.oracle")

_BATCH_CELLS = 4_000_000


def upper_koszul(i: MonomialIdeal, a: Monomial) -> SimplicialComplex:
    """Returns ``K^a(I)``; the facets are ``{j : g_j < a_j}`` for every generator ``g`` dividing ``a``."""
    if len(a) != i.n or any(x < 0 for x in a):
        raise ValueError(f"invalid multidegree {a}")
    facets = [_facet_mask(g, a) for g in i.gens if divides(g, a)]
    return SimplicialComplex.from_facets(i.n, facets)


def _facet_mask(g: Monomial, a: Monomial) -> int:
    return sum(1 << j for j, (x, y) in enumerate(zip(g, a)) if x < y)


@dataclasses.dataclass(frozen=True)
class BettiTable:
    """Multigraded Betti numbers ``β_{i,a}`` of an ideal together with the field they were computed over."""

    n: int
    """Number of variables"""
    entries: dict[tuple[int, Monomial], int]
    """Nonzero ranks keyed by homological index and multidegree"""
    field: HomologyField = RATIONALS

    def graded(self) -> dict[tuple[int, int], int]:
        """Collapsed table ``β_{i,j} = Σ_{|a|=j} β_{i,a}``."""
        table: dict[tuple[int, int], int] = defaultdict(int)
        for (i, a), rank in self.entries.items():
            table[(i, sum(a))] += rank
        return dict(sorted(table.items()))

    def total(self, i: int) -> int:
        return sum(rank for (k, _), rank in self.entries.items() if k == i)

    @property
    def projdim(self) -> int:
        """Projective dimension of the ideal, the largest ``i`` with a nonzero entry."""
        return max(i for i, _ in self.entries)

    def degrees(self, i: int | None = None) -> list[Monomial]:
        return sorted({a for k, a in self.entries if i is None or k == i}, key=lambda a: (sum(a), a))

    def format_text(self) -> str:
        """Aligned table with homological index rows and total degree columns, zeros shown as ``.``."""
        graded = self.graded()
        rows = sorted({i for i, _ in graded})
        columns = sorted({j for _, j in graded})
        header = ["i\\j"] + [str(j) for j in columns] + ["total"]
        body = [
            [f"{i}:"] + [str(graded[(i, j)]) if (i, j) in graded else "." for j in columns] + [str(self.total(i))]
            for i in rows
        ]
        widths = [max(len(line[c]) for line in [header, *body]) for c in range(len(header))]
        lines = [" ".join(cell.rjust(w) for cell, w in zip(line, widths)) for line in [header, *body]]
        lines.append(f"field: {self.field}")
        return "\n".join(lines)

    def to_document(self) -> dict:
        """Machine readable form keyed by ``"(i, a)"``."""
        return {
            "field": str(self.field),
            "entries": {f"({i}, {list(a)})": rank for (i, a), rank in sorted(self.entries.items())},
            "graded": {f"({i}, {j})": rank for (i, j), rank in self.graded().items()},
        }

    def __repr__(self):
        return f"<{self.__class__.__name__} projdim={self.projdim} field={self.field}>"


def _non_cone_degrees(i: MonomialIdeal, lattice: np.ndarray) -> list[tuple[Monomial, list[int]]]:
    gens = np.array(i.gens, dtype=np.int64)
    m, n = gens.shape
    weights = 1 << np.arange(n, dtype=np.int64)
    result = []
    batch = max(1, _BATCH_CELLS // max(1, m * n))
    for start in range(0, len(lattice), batch):
        block = lattice[start : start + batch]
        divisible = np.all(gens[None, :, :] <= block[:, None, :], axis=2)
        below = gens[None, :, :] < block[:, None, :]
        # a vertex lying in every facet makes the complex a cone
        common = np.all(below | ~divisible[:, :, None], axis=1)
        keep = ~np.any(common, axis=1)
        masks = below.astype(np.int64) @ weights
        for row in np.nonzero(keep)[0].tolist():
            facets = masks[row][divisible[row]].tolist()
            result.append((tuple(block[row].tolist()), facets))
    return result


def betti_table(
    i: MonomialIdeal, field: HomologyField = RATIONALS, lattice_cap: int | None = None
) -> BettiTable:
    """Computes ``β_{i,a}(I)`` for every ``a`` of the lcm lattice.

    :param i: a proper nonzero monomial ideal.
    :param field: homology coefficients.
    :param lattice_cap: overrides :py:data:`~depthlab.options.CAP_LATTICE`.
    """
    if not i.is_proper_nonzero:
        raise UndefinedDimensionError(info="Betti numbers need a proper nonzero ideal")
    lattice = lcm_lattice(i, cap=lattice_cap)
    candidates = _non_cone_degrees(i, lattice.as_array())
    LOGGER.debug("betti table: %d lattice degrees, %d non-cone", len(lattice), len(candidates))
    entries: dict[tuple[int, Monomial], int] = {}
    for a, facets in candidates:
        homology = reduced_homology(SimplicialComplex.from_facets(i.n, facets), field)
        for k, rank in enumerate(homology):
            if rank:
                entries[(k, a)] = rank
    return BettiTable(i.n, entries, field)


def projdim(i: MonomialIdeal, field: HomologyField = RATIONALS, lattice_cap: int | None = None) -> int:
    return betti_table(i, field, lattice_cap).projdim


def depth_quotient_oracle(
    i: MonomialIdeal, field: HomologyField = RATIONALS, lattice_cap: int | None = None
) -> int:
    """``depth S/I = n - (projdim I + 1)``."""
    return i.n - projdim(i, field, lattice_cap) - 1


@dataclasses.dataclass(frozen=True)
class DepthProfile:
    """Values ``depth S/I^k`` for ``k = 1..kmax``."""

    values: tuple[int, ...]
    stable_tail: tuple[int, int] | None = None
    """``(k0, value)`` when the last ``min(3, kmax)`` values agree; observed, never certified"""

    @property
    def kmax(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int) -> int:
        """Depth at power ``k`` (1-based)."""
        if not 1 <= k <= len(self.values):
            raise IndexError(k)
        return self.values[k - 1]

    def is_non_increasing(self) -> bool:
        return all(a >= b for a, b in zip(self.values, self.values[1:]))

    def is_non_decreasing(self) -> bool:
        return all(a <= b for a, b in zip(self.values, self.values[1:]))

    @classmethod
    def from_values(cls, values) -> "DepthProfile":
        values = tuple(values)
        window = min(3, len(values))
        tail = None
        if values and len(set(values[-window:])) == 1:
            k0 = len(values)
            while k0 > 1 and values[k0 - 2] == values[-1]:
                k0 -= 1
            tail = (k0, values[-1])
        return cls(values, tail)


def depth_profile(
    i: MonomialIdeal, kmax: int, field: HomologyField = RATIONALS, lattice_cap: int | None = None
) -> DepthProfile:
    if kmax < 1:
        raise ValueError("kmax must be positive")
    values = []
    for k in range(1, kmax + 1):
        try:
            values.append(depth_quotient_oracle(power(i, k), field, lattice_cap))
        except ResourceLimitError as e:
            raise e.with_power(k) from e
        LOGGER.info("depth S/I^%d = %d", k, values[-1])
    return DepthProfile.from_values(values)


def has_linear_resolution(i: MonomialIdeal, field: HomologyField = RATIONALS, lattice_cap: int | None = None) -> bool:
    d = generating_degree(i)
    if d is None:
        return False
    return all(j == k + d for k, j in betti_table(i, field, lattice_cap).graded())


def linear_projdim(i: MonomialIdeal, field: HomologyField = RATIONALS, lattice_cap: int | None = None) -> int:
    """Length of the lowest linear strand, ``max{i : β_{i,i+d}(I) ≠ 0}``."""
    d = generating_degree(i)
    if d is None:
        raise UnsupportedInputError(info="linear projective dimension needs an equigenerated ideal")
    return max(k for k, j in betti_table(i, field, lattice_cap).graded() if j == k + d)


def linear_strand(i: MonomialIdeal, field: HomologyField = RATIONALS, lattice_cap: int | None = None) -> list[int]:
    """Ranks ``β_{i,i+d}(I)`` for ``i = 0..n``."""
    d = generating_degree(i)
    if d is None:
        raise UnsupportedInputError(info="linear strand needs an equigenerated ideal")
    graded = betti_table(i, field, lattice_cap).graded()
    return [graded.get((k, k + d), 0) for k in range(i.n + 1)]


def is_cohen_macaulay(i: MonomialIdeal, field: HomologyField = RATIONALS, lattice_cap: int | None = None) -> bool:
    return depth_quotient_oracle(i, field, lattice_cap) == krull_dim_quotient(i)
