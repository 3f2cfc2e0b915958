"""Finite posets, their distributive lattices of ideals and the ideals ``H_P`` spanned by their poset ideals.

Subsets of a poset are bit sets, element ``p_{i+1}`` is bit ``i``.
"""

import dataclasses
import functools
import itertools
import logging
from collections.abc import Iterable, Sequence

from .. import options
from .._exceptions import ConsistencyError, InvalidSpecError, ResourceLimitError
from ..monomials import Monomial, MonomialIdeal, VariableSet, power

LOGGER = logging.getLogger("depthlab.constructions.posets")


def _bits(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclasses.dataclass(frozen=True)
class Poset:
    """Finite poset given by cover relations ``p_a < p_b``."""

    names: tuple[str, ...]
    covers: frozenset[tuple[int, int]]
    """Pairs ``(a, b)`` with ``p_a < p_b``, 0-based"""
    down: tuple[int, ...] = dataclasses.field(init=False, repr=False)
    """``down[i]`` is the bit set of elements ``<= p_i``"""

    def __init__(self, names: Iterable[str] | int, covers: Iterable[tuple[int, int]] = ()):
        names = tuple(f"p{i}" for i in range(1, names + 1)) if isinstance(names, int) else tuple(names)
        if not names:
            raise InvalidSpecError("nonempty poset")
        if len(set(names)) != len(names):
            raise InvalidSpecError("distinct element names")
        n = len(names)
        covers = frozenset((a, b) for a, b in covers)
        for a, b in covers:
            if not (0 <= a < n and 0 <= b < n):
                raise InvalidSpecError("element range", info=f"cover ({a}, {b})")
        down = [1 << i for i in range(n)]
        changed = True
        while changed:
            changed = False
            for a, b in covers:
                merged = down[b] | down[a]
                if merged != down[b]:
                    down[b] = merged
                    changed = True
        for i in range(n):
            for j in _bits(down[i]):
                if j != i and down[j] >> i & 1:
                    raise InvalidSpecError("acyclic covers", info=f"{names[i]} and {names[j]} lie below each other")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "covers", covers)
        object.__setattr__(self, "down", tuple(down))

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def leq(self, a: int, b: int) -> bool:
        return bool(self.down[b] >> a & 1)

    def comparable(self, a: int, b: int) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def is_ideal(self, mask: int) -> bool:
        return all(self.down[i] & ~mask == 0 for i in _bits(mask))

    def maximal_elements(self, mask: int) -> int:
        result = 0
        for i in _bits(mask):
            if not any(j != i and self.leq(i, j) for j in _bits(mask)):
                result |= 1 << i
        return result

    def minimal_elements(self, mask: int) -> int:
        result = 0
        for i in _bits(mask):
            if not any(j != i and self.leq(j, i) for j in _bits(mask)):
                result |= 1 << i
        return result

    def cover_relations(self) -> list[tuple[int, int]]:
        """Cover pairs of the transitive reduction, sorted."""
        result = []
        for b in range(self.n):
            below = self.down[b] & ~(1 << b)
            for a in _bits(below):
                if not any(c not in (a, b) and self.leq(a, c) for c in _bits(below)):
                    result.append((a, b))
        return sorted(result)

    def __repr__(self):
        return f"<{self.__class__.__name__} n={self.n} covers={len(self.covers)}>"


def antichain_poset(n: int) -> Poset:
    return Poset(n)


def chain_poset(n: int) -> Poset:
    return Poset(n, ((i, i + 1) for i in range(n - 1)))


def ordinal_sum(sizes: Sequence[int]) -> Poset:
    """Antichains of the given sizes stacked so that each layer lies below the next one."""
    if not sizes or any(a < 1 for a in sizes):
        raise InvalidSpecError("positive sizes", info=f"{list(sizes)}")
    layers = []
    start = 0
    for a in sizes:
        layers.append(range(start, start + a))
        start += a
    covers = [(a, b) for lower, upper in zip(layers, layers[1:]) for a in lower for b in upper]
    return Poset(start, covers)


def rank(p: Poset) -> int:
    """Length of a longest chain minus one."""
    longest = [0] * p.n
    for i in sorted(range(p.n), key=lambda x: popcount(p.down[x])):
        longest[i] = 1 + max((longest[j] for j in _bits(p.down[i]) if j != i), default=0)
    return max(longest) - 1


def is_antichain(p: Poset, mask: int) -> bool:
    elements = _bits(mask)
    return not any(p.comparable(a, b) for k, a in enumerate(elements) for b in elements[k + 1 :])


def generated_ideal(p: Poset, mask: int) -> int:
    """The poset ideal ``<A>`` of elements lying below some element of ``A``."""
    result = 0
    for i in _bits(mask):
        result |= p.down[i]
    return result


@functools.lru_cache(maxsize=256)
def _poset_ideals(p: Poset, cap: int) -> tuple[int, ...]:
    seen = {0}
    frontier = [0]
    while frontier:
        fresh = []
        for mask in frontier:
            for i in range(p.n):
                if not mask >> i & 1 and p.down[i] & ~mask == 1 << i:
                    grown = mask | 1 << i
                    if grown not in seen:
                        seen.add(grown)
                        fresh.append(grown)
        if len(seen) > cap:
            raise ResourceLimitError("poset_ideals", cap, {"ideals": len(seen), "elements": p.n})
        frontier = fresh
    return tuple(sorted(seen, key=lambda m: (popcount(m), m)))


def poset_ideals(p: Poset, cap: int | None = None) -> tuple[int, ...]:
    """All poset ideals, the elements of ``J(P)``, by size then bit pattern."""
    return _poset_ideals(p, cap if cap is not None else options.CAP_POSET_IDEALS)


def antichains(p: Poset) -> tuple[int, ...]:
    """Every antichain, the empty one included; each is the set of maximal elements of one poset ideal."""
    return tuple(sorted({p.maximal_elements(mask) for mask in poset_ideals(p)}, key=lambda m: (popcount(m), m)))


def hp_variables(p: Poset) -> VariableSet:
    return VariableSet([f"x{i}" for i in range(1, p.n + 1)] + [f"y{i}" for i in range(1, p.n + 1)])


def hp_generator(p: Poset, mask: int) -> Monomial:
    """``u_I = prod_{p_i in I} x_i * prod_{p_i not in I} y_i``."""
    x = tuple(mask >> i & 1 for i in range(p.n))
    return x + tuple(1 - a for a in x)


def hp_ideal(p: Poset, cap: int | None = None) -> MonomialIdeal:
    """``H_P`` in the ``2n`` variables ``x1..xn, y1..yn``."""
    return MonomialIdeal(hp_variables(p), (hp_generator(p, mask) for mask in poset_ideals(p, cap)))


@dataclasses.dataclass(frozen=True)
class AntichainSequence:
    """Pairwise disjoint antichains ``A_1, ..., A_r`` with nested generated ideals."""

    antichains: tuple[int, ...]

    @property
    def size(self) -> int:
        return sum(popcount(a) for a in self.antichains)

    def is_acceptable(self, p: Poset, k: int) -> bool:
        if len(self.antichains) > k:
            return False
        used = 0
        previous = 0
        for a in self.antichains:
            ideal = generated_ideal(p, a)
            if not is_antichain(p, a) or a & used or previous & ~ideal:
                return False
            used |= a
            previous = ideal
        return True

    def format(self, p: Poset) -> str:
        return " | ".join("{" + ", ".join(p.names[i] for i in _bits(a)) + "}" for a in self.antichains)


def delta(p: Poset, k: int, cap: int | None = None) -> tuple[int, AntichainSequence]:
    """Largest total size of a ``k``-acceptable sequence of antichains, with a witness.

    :raises ResourceLimitError: if ``|P|`` is above ``cap``, defaults to :py:data:`~depthlab.options.CAP_DELTA`.
    """
    if k < 1:
        raise ValueError("k must be positive")
    cap = cap if cap is not None else options.CAP_DELTA
    if p.n > cap:
        raise ResourceLimitError("delta", cap, {"elements": p.n})
    candidates = [(a, generated_ideal(p, a)) for a in antichains(p) if a]

    @functools.lru_cache(maxsize=None)
    def best(current: int, used: int, left: int) -> tuple[int, tuple[int, ...]]:
        result: tuple[int, tuple[int, ...]] = (0, ())
        if left == 0:
            return result
        for a, ideal in candidates:
            if a & used or current & ~ideal:
                continue
            size, tail = best(ideal, used | a, left - 1)
            size += popcount(a)
            if size > result[0]:
                result = (size, (a,) + tail)
        return result

    value, witness = best(0, 0, k)
    LOGGER.debug("delta(P;%d) = %d, %d states", k, value, best.cache_info().currsize)
    return value, AntichainSequence(witness)


def predicted_depth_hp(p: Poset, k: int, cap: int | None = None) -> int:
    """``depth S/H_P^k = 2n - δ(P;k) - 1``."""
    return 2 * p.n - delta(p, k, cap)[0] - 1


def multichain(p: Poset, w: Monomial, k: int) -> tuple[int, ...]:
    """Recovers ``I_1 ⊆ ... ⊆ I_k`` with ``w = u_{I_1} ... u_{I_k}`` from the ``x`` exponents of ``w``."""
    x = w[: p.n]
    chain = tuple(sum(1 << i for i in range(p.n) if x[i] >= k - j + 1) for j in range(1, k + 1))
    if not all(p.is_ideal(mask) for mask in chain):
        raise ConsistencyError(info=f"{w} does not come from a multichain of poset ideals")
    product = [0] * (2 * p.n)
    for mask in chain:
        product = [a + b for a, b in zip(product, hp_generator(p, mask))]
    if tuple(product) != tuple(w):
        raise ConsistencyError(info=f"{w} is not the product of its reconstructed multichain")
    return chain


def _u_key(mask: int) -> tuple[int, int]:
    # bigger ideals give smaller u_I
    return -popcount(mask), mask


def hp_power_order(p: Poset, k: int, cap: int | None = None) -> tuple[Monomial, ...]:
    """Generators of ``H_P^k`` from the largest to the smallest in the lexicographic order of multichains.

    The ``u_I`` are ordered with ``u_I < u_J`` whenever ``J ⊂ I``, so the order starts at ``u_∅^k``.
    """
    gens = power(hp_ideal(p, cap), k).gens
    keyed = [(tuple(_u_key(mask) for mask in multichain(p, w, k)), w) for w in gens]
    keyed.sort(reverse=True)
    return tuple(w for _, w in keyed)


def _relation_key(p: Poset, perm: Sequence[int]) -> tuple[int, ...]:
    return tuple(int(p.leq(perm[a], perm[b])) for a in range(p.n) for b in range(p.n))


def all_posets(n: int) -> list[Poset]:
    """Every poset on ``n`` elements up to isomorphism, labelled so that ``p_a < p_b`` implies ``a < b``.

    Suitable for small ``n`` only: all relations on the naturally labelled elements are closed and then deduplicated
    over the ``n!`` relabellings.
    """
    if n < 1:
        raise InvalidSpecError("nonempty poset")
    pairs = list(itertools.combinations(range(n), 2))
    perms = list(itertools.permutations(range(n)))
    seen: dict[tuple[int, ...], Poset] = {}
    for chosen in range(1 << len(pairs)):
        p = Poset(n, (pairs[k] for k in _bits(chosen)))
        canonical = min(_relation_key(p, perm) for perm in perms)
        if canonical not in seen:
            seen[canonical] = Poset(n, p.cover_relations())
    LOGGER.debug("all_posets(%d): %d isomorphism classes", n, len(seen))
    return list(seen.values())
