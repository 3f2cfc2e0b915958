"""Exact arithmetic on monomials and monomial ideals.

Monomials are plain tuples of nonnegative exponents. A :py:class:`MonomialIdeal` binds a tuple of them to its
:py:class:`VariableSet` and always stores the minimal generating set in canonical order.
"""

import dataclasses
import logging
import typing
from collections.abc import Iterable

import numpy as np

from . import options
from ._exceptions import AmbientMismatchError, ResourceLimitError, UndefinedDimensionError

LOGGER = logging.getLogger("depthlab.monomials")

Monomial = tuple[int, ...]
"""Exponent vector of a monomial. The zero vector stands for ``1``."""

MAX_EXPONENT = 2**62 - 1
"""Largest exponent accepted by checked arithmetic."""


@dataclasses.dataclass(frozen=True)
class VariableSet:
    """Ordered set of distinct variable names, index ``0`` is the greatest variable."""

    names: tuple[str, ...]

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if not names:
            raise ValueError("VariableSet needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names: {names}")
        object.__setattr__(self, "names", names)

    @classmethod
    def standard(cls, n: int, prefix: str = "x") -> "VariableSet":
        """Returns ``x1, ..., xn``."""
        return cls(f"{prefix}{i}" for i in range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def extend(self, names: Iterable[str]) -> "VariableSet":
        """Returns a new variable set with ``names`` appended after the current ones."""
        return VariableSet(self.names + tuple(names))

    def one(self) -> Monomial:
        return (0,) * self.n

    def variable(self, i: int) -> Monomial:
        e = [0] * self.n
        e[i] = 1
        return tuple(e)

    def __repr__(self):
        return f"<{self.__class__.__name__} {' '.join(self.names)}>"


def degree(u: Monomial) -> int:
    return sum(u)


def support(u: Monomial) -> tuple[int, ...]:
    """Indices of variables that occur in ``u``."""
    return tuple(i for i, a in enumerate(u) if a)


def divides(u: Monomial, v: Monomial) -> bool:
    """Returns ``True`` when ``u`` divides ``v``."""
    return all(a <= b for a, b in zip(u, v))


def _check_exponents(u: Monomial) -> Monomial:
    if u and max(u) > MAX_EXPONENT:
        raise OverflowError(f"exponent exceeds {MAX_EXPONENT}")
    return u


def mul(u: Monomial, v: Monomial) -> Monomial:
    if len(u) != len(v):
        raise AmbientMismatchError(info=f"monomials of length {len(u)} and {len(v)}")
    return _check_exponents(tuple(a + b for a, b in zip(u, v)))


def div(u: Monomial, v: Monomial) -> Monomial:
    """Exact quotient ``u / v``, ``v`` must divide ``u``."""
    if not divides(v, u):
        raise ValueError(f"{v} does not divide {u}")
    return tuple(a - b for a, b in zip(u, v))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def gcd(u: Monomial, v: Monomial) -> Monomial:
    return tuple(min(a, b) for a, b in zip(u, v))


def pow_monomial(u: Monomial, k: int) -> Monomial:
    return _check_exponents(tuple(a * k for a in u))


def is_squarefree_monomial(u: Monomial) -> bool:
    return all(a <= 1 for a in u)


def canonical_key(u: Monomial) -> tuple:
    """Total degree ascending, then lexicographically descending under ``x1 > x2 > ...``."""
    return sum(u), tuple(-a for a in u)


def _minimal_gens(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    # sorting by degree first means a divisor is always met before its multiples
    result: list[Monomial] = []
    for u in sorted(set(gens), key=canonical_key):
        if not any(divides(v, u) for v in result):
            result.append(u)
    return tuple(result)


@dataclasses.dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators ``G(I)`` in canonical order."""

    ambient: VariableSet
    """Variables of the polynomial ring"""
    gens: tuple[Monomial, ...]
    """Minimal generators, total degree ascending then lexicographically descending"""

    def __init__(self, ambient: VariableSet, gens: Iterable[Monomial] = ()):
        gens = tuple(tuple(int(a) for a in u) for u in gens)
        for u in gens:
            if len(u) != ambient.n:
                raise AmbientMismatchError(info=f"monomial {u} does not live in {ambient}")
            if any(a < 0 for a in u):
                raise ValueError(f"negative exponent in {u}")
            _check_exponents(u)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "gens", _minimal_gens(gens))

    @property
    def n(self) -> int:
        return self.ambient.n

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == (self.ambient.one(),)

    @property
    def is_proper_nonzero(self) -> bool:
        return bool(self.gens) and not self.is_unit

    def __len__(self):
        return len(self.gens)

    def __iter__(self) -> typing.Iterator[Monomial]:
        return iter(self.gens)

    def __contains__(self, u: Monomial) -> bool:
        return contains(self, u)

    def __repr__(self):
        return f"<{self.__class__.__name__} n={self.n} gens={len(self.gens)}>"


def unit_ideal(ambient: VariableSet) -> MonomialIdeal:
    return MonomialIdeal(ambient, [ambient.one()])


def _check_same_ambient(*ideals: MonomialIdeal) -> VariableSet:
    ambient = ideals[0].ambient
    for i in ideals[1:]:
        if i.ambient != ambient:
            raise AmbientMismatchError(info=f"{ambient} vs {i.ambient}")
    return ambient


def minimalize(ambient: VariableSet, gens: Iterable[Monomial]) -> MonomialIdeal:
    """Returns the ideal with the divisibility-reduced generating set of ``gens``."""
    return MonomialIdeal(ambient, gens)


def product(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    ambient = _check_same_ambient(i, j)
    return MonomialIdeal(ambient, (mul(u, v) for u in i.gens for v in j.gens))


def power(i: MonomialIdeal, k: int) -> MonomialIdeal:
    """Minimal generators of ``I^k``; ``k = 0`` gives the unit ideal."""
    if k < 0:
        raise ValueError("power must be nonnegative")
    if k == 0:
        return unit_ideal(i.ambient)
    result = i
    for step in range(2, k + 1):
        gens = {mul(u, v) for u in result.gens for v in i.gens}
        result = MonomialIdeal(i.ambient, gens)
        LOGGER.debug("power k=%d: %d products, %d minimal generators", step, len(gens), len(result.gens))
    return result


def colon_monomial(i: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """Returns ``I : u`` generated by ``v / gcd(v, u)`` for ``v`` in ``G(I)``."""
    if len(u) != i.n:
        raise AmbientMismatchError(info=f"monomial {u} does not live in {i.ambient}")
    return MonomialIdeal(i.ambient, (tuple(max(a - b, 0) for a, b in zip(v, u)) for v in i.gens))


def contains(i: MonomialIdeal, u: Monomial) -> bool:
    if len(u) != i.n:
        raise AmbientMismatchError(info=f"monomial {u} does not live in {i.ambient}")
    return any(divides(v, u) for v in i.gens)


def ideal_equal(i: MonomialIdeal, j: MonomialIdeal) -> bool:
    return i.ambient == j.ambient and i.gens == j.gens


def is_equigenerated(i: MonomialIdeal) -> bool:
    return len({degree(u) for u in i.gens}) <= 1


def generating_degree(i: MonomialIdeal) -> int | None:
    """The common degree of an equigenerated ideal, ``None`` otherwise."""
    degrees = {degree(u) for u in i.gens}
    return degrees.pop() if len(degrees) == 1 else None


def is_squarefree(i: MonomialIdeal) -> bool:
    return all(is_squarefree_monomial(u) for u in i.gens)


def extend(i: MonomialIdeal, names: Iterable[str]) -> MonomialIdeal:
    """Embeds ``I`` into a ring with extra trailing variables."""
    ambient = i.ambient.extend(names)
    pad = (0,) * (ambient.n - i.n)
    return MonomialIdeal(ambient, (u + pad for u in i.gens))


def restrict(i: MonomialIdeal, names: Iterable[str]) -> MonomialIdeal:
    """Moves ``I`` to the variables ``names``; every variable in the support of ``I`` must be kept."""
    ambient = VariableSet(names)
    positions = [i.ambient.index(name) if name in i.ambient.names else None for name in ambient.names]
    kept = {p for p in positions if p is not None}
    for u in i.gens:
        if any(u[j] for j in range(i.n) if j not in kept):
            raise AmbientMismatchError(info=f"generator {u} uses a dropped variable")
    return MonomialIdeal(ambient, (tuple(u[p] if p is not None else 0 for p in positions) for u in i.gens))


@dataclasses.dataclass(frozen=True)
class MultidegreeSet:
    """Elements of the lcm lattice of a monomial ideal, in degree-lexicographic order."""

    degrees: tuple[Monomial, ...]

    def __len__(self):
        return len(self.degrees)

    def __iter__(self) -> typing.Iterator[Monomial]:
        return iter(self.degrees)

    def __contains__(self, a: Monomial) -> bool:
        return a in self._lookup

    @property
    def _lookup(self) -> frozenset:
        lookup = self.__dict__.get("_lookup_cache")
        if lookup is None:
            lookup = frozenset(self.degrees)
            object.__setattr__(self, "_lookup_cache", lookup)
        return lookup

    def as_array(self) -> np.ndarray:
        return np.array(self.degrees, dtype=np.int64).reshape(len(self.degrees), -1)


_JOIN_BATCH_CELLS = 4_000_000


def lcm_lattice(i: MonomialIdeal, cap: int | None = None) -> MultidegreeSet:
    """Closure of the generator degrees under componentwise maximum.

    :param i: a nonzero ideal.
    :param cap: maximal lattice size, defaults to :py:data:`~depthlab.options.CAP_LATTICE`.
    """
    if i.is_zero:
        raise UndefinedDimensionError(info="lcm lattice of the zero ideal")
    cap = cap if cap is not None else options.CAP_LATTICE
    gens = np.array(i.gens, dtype=np.int64)
    m, n = gens.shape
    seen: set[Monomial] = set(i.gens)
    frontier = gens
    batch = max(1, _JOIN_BATCH_CELLS // max(1, m * n))
    while len(frontier):
        fresh: list[Monomial] = []
        for start in range(0, len(frontier), batch):
            block = frontier[start : start + batch]
            joins = np.maximum(block[:, None, :], gens[None, :, :]).reshape(-1, n)
            for row in np.unique(joins, axis=0).tolist():
                a = tuple(row)
                if a not in seen:
                    seen.add(a)
                    fresh.append(a)
            if len(seen) > cap:
                raise ResourceLimitError("lattice", cap, {"degrees": len(seen), "generators": m})
        LOGGER.debug("lcm lattice: %d new degrees, %d total", len(fresh), len(seen))
        frontier = np.array(fresh, dtype=np.int64).reshape(len(fresh), n)
    return MultidegreeSet(tuple(sorted(seen, key=lambda a: (sum(a), a))))


def _disjoint_count(supports: list[frozenset[int]]) -> int:
    """Size of a greedy family of pairwise disjoint supports, a lower bound for any cover."""
    used: set[int] = set()
    count = 0
    for s in sorted(supports, key=len):
        if not s & used:
            used |= s
            count += 1
    return count


def _cover_size(supports: list[frozenset[int]], bound: int) -> int:
    """``min(bound, c)`` where ``c`` is the least number of variables meeting every support."""
    if not supports:
        return 0
    if _disjoint_count(supports) >= bound:
        return bound
    best = bound
    for v in sorted(min(supports, key=len)):
        best = min(best, 1 + _cover_size([s for s in supports if v not in s], best - 1))
    return best


def krull_dim_quotient(i: MonomialIdeal) -> int:
    """Returns ``dim S/I`` as ``n`` minus the minimal size of a variable set meeting every generator."""
    if not i.is_proper_nonzero:
        raise UndefinedDimensionError(info="dimension needs a proper nonzero ideal")
    candidates = {frozenset(support(u)) for u in i.gens}
    supports = sorted((s for s in candidates if not any(t < s for t in candidates)), key=sorted)
    return i.n - _cover_size(supports, len(set().union(*supports)))

