"""Buchberger's algorithm specialised to pure difference binomials.

A binomial ``lead - trail`` with unit coefficients reduces a monomial ``m`` with ``lead | m`` to the monomial
``(m / lead) * trail``. The normal form of a binomial is therefore the difference of the normal forms of its two
terms, and every S-polynomial stays a binomial.
"""

import dataclasses
import heapq
import logging
from collections.abc import Iterable, Sequence

from .. import options
from .._exceptions import ResourceLimitError
from ..monomials import Monomial, divides, gcd, lcm
from .orders import TermOrder

LOGGER = logging.getLogger("depthlab.rees.groebner")


@dataclasses.dataclass(frozen=True)
class Binomial:
    """``lead - trail`` with ``lead`` the larger term under the order it was built for."""

    lead: Monomial
    trail: Monomial

    def __post_init__(self):
        if self.lead == self.trail:
            raise ValueError("binomial terms must differ")

    @classmethod
    def oriented(cls, a: Monomial, b: Monomial, order: TermOrder) -> "Binomial | None":
        """Builds ``a - b`` up to sign, ``None`` when the terms cancel."""
        if a == b:
            return None
        return cls(a, b) if order.greater(a, b) else cls(b, a)

    def terms(self) -> tuple[Monomial, Monomial]:
        return self.lead, self.trail


def _find_reducer(u: Monomial, basis: Sequence[Binomial], skip: int | None = None) -> Binomial | None:
    for k, g in enumerate(basis):
        if k != skip and divides(g.lead, u):
            return g
    return None


def normal_form(u: Monomial, basis: Sequence[Binomial], skip: int | None = None) -> Monomial:
    """Fully reduces the monomial ``u`` modulo ``basis``; the result is again a monomial."""
    while True:
        g = _find_reducer(u, basis, skip)
        if g is None:
            return u
        u = tuple(a - b + c for a, b, c in zip(u, g.lead, g.trail))


def reduce_binomial(f: Binomial, basis: Sequence[Binomial], order: TermOrder) -> Binomial | None:
    return Binomial.oriented(normal_form(f.lead, basis), normal_form(f.trail, basis), order)


def s_binomial(f: Binomial, g: Binomial, order: TermOrder) -> Binomial | None:
    top = lcm(f.lead, g.lead)
    a = tuple(x - y + z for x, y, z in zip(top, f.lead, f.trail))
    b = tuple(x - y + z for x, y, z in zip(top, g.lead, g.trail))
    return Binomial.oriented(a, b, order)


@dataclasses.dataclass(frozen=True)
class GroebnerBasis:
    """Gröbner basis made of binomials, sorted by leading term ascending."""

    elements: tuple[Binomial, ...]
    order: TermOrder
    reduced: bool = True
    stats: dict = dataclasses.field(default_factory=dict, compare=False, hash=False)
    """Progress counters of the run that produced the basis"""

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def leads(self) -> tuple[Monomial, ...]:
        return tuple(g.lead for g in self.elements)

    def normal_form(self, u: Monomial) -> Monomial:
        return normal_form(u, self.elements)

    def in_initial_ideal(self, u: Monomial) -> bool:
        return _find_reducer(u, self.elements) is not None

    def is_reduced(self) -> bool:
        """No lead term divides a term of another element."""
        for k, g in enumerate(self.elements):
            for term in g.terms():
                if _find_reducer(term, self.elements, skip=k) is not None:
                    return False
            if divides(g.lead, g.trail):
                return False
        return True

    def __repr__(self):
        return f"<{self.__class__.__name__} elements={len(self.elements)} reduced={self.reduced}>"


def _coprime_leads(f: Binomial, g: Binomial) -> bool:
    return not any(gcd(f.lead, g.lead))


def _reduce_basis(basis: list[Binomial], order: TermOrder) -> tuple[Binomial, ...]:
    minimal: list[Binomial] = []
    for g in sorted(basis, key=lambda b: order.key(b.lead)):
        if not any(divides(h.lead, g.lead) for h in minimal):
            minimal.append(g)
    result = []
    for k, g in enumerate(minimal):
        trail = normal_form(g.trail, minimal, skip=k)
        result.append(Binomial(g.lead, trail))
    return tuple(result)


def buchberger(gens: Iterable[Binomial], order: TermOrder, cap: int | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by binomials.

    Pairs are taken by the normal strategy, smallest ``lcm`` of leading terms first with pair indices breaking
    ties. Buchberger's product and chain criteria drop pairs that reduce to zero.

    :raises ResourceLimitError: after more than ``cap`` S-pair reductions,
        defaults to :py:data:`~depthlab.options.CAP_BUCHBERGER`.
    """
    cap = cap if cap is not None else options.CAP_BUCHBERGER
    basis: list[Binomial] = []
    for f in gens:
        f = Binomial.oriented(f.lead, f.trail, order)
        if f is not None:
            basis.append(f)
    pending: list[tuple] = []
    waiting: set[tuple[int, int]] = set()
    stats = {"reductions": 0, "product_skips": 0, "chain_skips": 0, "added": 0}

    def push_pairs(new: int) -> None:
        for k in range(new):
            top = lcm(basis[k].lead, basis[new].lead)
            heapq.heappush(pending, (order.key(top), k, new))
            waiting.add((k, new))

    for k in range(1, len(basis)):
        push_pairs(k)

    while pending:
        _, i, j = heapq.heappop(pending)
        waiting.discard((i, j))
        f, g = basis[i], basis[j]
        if _coprime_leads(f, g):
            stats["product_skips"] += 1
            continue
        top = lcm(f.lead, g.lead)
        if any(
            k not in (i, j)
            and divides(basis[k].lead, top)
            and (min(i, k), max(i, k)) not in waiting
            and (min(j, k), max(j, k)) not in waiting
            for k in range(len(basis))
        ):
            stats["chain_skips"] += 1
            continue
        stats["reductions"] += 1
        if stats["reductions"] > cap:
            raise ResourceLimitError("buchberger", cap, {**stats, "basis": len(basis), "pending": len(pending)})
        s = s_binomial(f, g, order)
        h = reduce_binomial(s, basis, order) if s is not None else None
        if h is None:
            continue
        basis.append(h)
        stats["added"] += 1
        push_pairs(len(basis) - 1)
        LOGGER.debug("buchberger: basis=%d pending=%d reductions=%d", len(basis), len(pending), stats["reductions"])

    elements = _reduce_basis(basis, order)
    stats["size"] = len(elements)
    LOGGER.debug("buchberger finished: %s", stats)
    return GroebnerBasis(elements, order, True, stats)
