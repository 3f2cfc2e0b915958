"""Reduced simplicial homology over the rationals or a prime field.

Faces are bit sets over at most a few dozen vertices. Ranks come from sparse Gaussian elimination on boundary
matrices whose rows are dictionaries ``{column: coefficient}``.
"""

import dataclasses
import logging
import typing
from collections.abc import Iterable
from fractions import Fraction

from sympy import isprime

LOGGER = logging.getLogger("depthlab.homology")


@dataclasses.dataclass(frozen=True)
class HomologyField:
    """Coefficient field for homology: the rationals (``characteristic=0``) or ``GF(p)``."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic and not isprime(self.characteristic):
            raise ValueError(f"field characteristic {self.characteristic} is not a prime")

    @classmethod
    def parse(cls, text: str) -> "HomologyField":
        """Parses ``q`` or ``p:<prime>``."""
        text = text.strip().lower()
        if text in ("q", "qq", "0"):
            return cls(0)
        if text.startswith("p:"):
            try:
                return cls(int(text[2:]))
            except ValueError as e:
                raise ValueError(f"invalid field '{text}'") from e
        raise ValueError(f"invalid field '{text}', expected 'q' or 'p:<prime>'")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def __str__(self):
        return "q" if self.is_rational else f"p:{self.characteristic}"


RATIONALS = HomologyField(0)


def _rank_rational(rows: Iterable[dict[int, int]]) -> int:
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        r = {c: Fraction(v) for c, v in row.items() if v}
        while r:
            pc = min(r)
            pivot = pivots.get(pc)
            if pivot is None:
                inv = 1 / r[pc]
                pivots[pc] = {c: v * inv for c, v in r.items()}
                break
            coeff = r[pc]
            for c, pv in pivot.items():
                value = r.get(c, 0) - coeff * pv
                if value:
                    r[c] = value
                else:
                    r.pop(c, None)
    return len(pivots)


def _rank_modular(rows: Iterable[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {c: v % p for c, v in row.items() if v % p}
        while r:
            pc = min(r)
            pivot = pivots.get(pc)
            if pivot is None:
                inv = pow(r[pc], p - 2, p)
                pivots[pc] = {c: (v * inv) % p for c, v in r.items()}
                break
            coeff = r[pc]
            for c, pv in pivot.items():
                value = (r.get(c, 0) - coeff * pv) % p
                if value:
                    r[c] = value
                else:
                    r.pop(c, None)
    return len(pivots)


def sparse_rank(rows: Iterable[dict[int, int]], field: HomologyField = RATIONALS) -> int:
    """Rank of an integer matrix given as sparse rows, computed over ``field``."""
    if field.is_rational:
        return _rank_rational(rows)
    return _rank_modular(rows, field.characteristic)


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclasses.dataclass(frozen=True)
class SimplicialComplex:
    """Finite simplicial complex on vertices ``0..vertices-1`` with faces stored as bit sets.

    The void complex has no faces at all, while ``{∅}`` contains only the empty face ``0``.
    """

    vertices: int
    faces: frozenset[int]

    @classmethod
    def from_facets(cls, vertices: int, facets: Iterable[int]) -> "SimplicialComplex":
        faces: set[int] = set()
        for facet in set(facets):
            if facet in faces:
                continue
            sub = facet
            while True:
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & facet
        return cls(vertices, frozenset(faces))

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def dimension(self) -> int:
        return max((_popcount(f) for f in self.faces), default=0) - 1

    def faces_of_dim(self, d: int) -> list[int]:
        return sorted(f for f in self.faces if _popcount(f) == d + 1)

    def facets(self) -> list[int]:
        return sorted(f for f in self.faces if not any(g != f and g & f == f for g in self.faces))

    def __repr__(self):
        return f"<{self.__class__.__name__} vertices={self.vertices} faces={len(self.faces)}>"


def _boundary_rows(faces: list[int], lower_index: dict[int, int]) -> typing.Iterator[dict[int, int]]:
    for face in faces:
        row: dict[int, int] = {}
        sign = 1
        bits = face
        while bits:
            low = bits & -bits
            row[lower_index[face ^ low]] = sign
            sign = -sign
            bits ^= low
        yield row


def reduced_homology(c: SimplicialComplex, field: HomologyField = RATIONALS) -> list[int]:
    """Ranks of reduced homology; entry ``d + 1`` holds the rank in dimension ``d`` starting from ``-1``."""
    if c.is_void:
        return [0]
    top = c.dimension
    by_dim = [c.faces_of_dim(d) for d in range(-1, top + 1)]
    ranks = [0] * (top + 3)
    for d in range(0, top + 1):
        lower = {f: idx for idx, f in enumerate(by_dim[d])}
        ranks[d + 1] = sparse_rank(_boundary_rows(by_dim[d + 1], lower), field)
    homology = [len(by_dim[k]) - ranks[k] - ranks[k + 1] for k in range(top + 2)]
    LOGGER.debug("reduced homology of %r: %s", c, homology)
    return homology
