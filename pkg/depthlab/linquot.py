"""Linear quotients: verification of generator orders, ``q(I)``, ordering search and polymatroids."""

import dataclasses
import logging
from collections.abc import Sequence

from . import options
from ._exceptions import InvalidOrderingError, ResourceLimitError, UnsupportedInputError
from .monomials import (
    Monomial,
    MonomialIdeal,
    colon_monomial,
    degree,
    div,
    generating_degree,
    mul,
)
from .oracle import has_linear_resolution

LOGGER = logging.getLogger("depthlab.linquot")


@dataclasses.dataclass(frozen=True)
class QuotientCertificate:
    """Result of checking a generator order for linear quotients."""

    ordering: tuple[Monomial, ...]
    """Generators in the checked order"""
    colons: tuple[tuple[int, ...], ...]
    """Variable indices generating ``(u_1..u_{j-1}) : u_j`` for ``j = 2..s``"""
    valid: bool
    violation: tuple[int, tuple[Monomial, ...]] | None = None
    """First failing step (1-based ``j``) with the minimal generators of its colon"""

    @property
    def q_list(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.colons)

    @property
    def q(self) -> int:
        """Largest number of colon variables; ``0`` for a principal ideal by convention."""
        return max(self.q_list, default=0)

    def format_text(self, names: Sequence[str] | None = None) -> str:
        def show(u: Monomial) -> str:
            if names is None:
                return str(u)
            factors = [n if a == 1 else f"{n}^{a}" for n, a in zip(names, u) if a]
            return " ".join(factors) or "1"

        lines = [f"valid: {'yes' if self.valid else 'no'}"]
        for j, u in enumerate(self.ordering, start=1):
            line = f"{j}: {show(u)}"
            if 2 <= j <= len(self.colons) + 1:
                colon = self.colons[j - 2]
                variables = ", ".join(names[v] if names else f"x{v + 1}" for v in colon)
                line += f"  colon=({variables}) q_{j}={len(colon)}"
            lines.append(line)
        if self.violation:
            step, colon_gens = self.violation
            lines.append(f"violation at step {step}: colon generated by {', '.join(show(u) for u in colon_gens)}")
        else:
            lines.append(f"q: {self.q}")
        return "\n".join(lines)


@dataclasses.dataclass(frozen=True)
class ExchangeWitness:
    """Pair ``u, v`` with an index ``i`` (``u_i > v_i``) and the exchange index ``j`` that was used, if any."""

    u: Monomial
    v: Monomial
    i: int
    j: int | None = None


def _resolve_ordering(i: MonomialIdeal, ordering: Sequence) -> tuple[Monomial, ...]:
    resolved = []
    for item in ordering:
        if isinstance(item, int):
            if not 0 <= item < len(i.gens):
                raise InvalidOrderingError(info=f"index {item} out of range")
            resolved.append(i.gens[item])
        else:
            resolved.append(tuple(item))
    return tuple(resolved)


def _colon_variables(prefix: Sequence[Monomial], u: Monomial, ambient) -> tuple[tuple[int, ...] | None, tuple]:
    colon = colon_monomial(MonomialIdeal(ambient, prefix), u)
    if all(degree(v) == 1 for v in colon.gens):
        return tuple(sorted(v.index(1) for v in colon.gens)), colon.gens
    return None, colon.gens


def verify_linear_quotients(i: MonomialIdeal, ordering: Sequence) -> QuotientCertificate:
    """Checks that every colon ``(u_1, ..., u_{j-1}) : u_j`` is generated by variables.

    :param i: the ideal.
    :param ordering: every minimal generator exactly once, as monomials or indices into ``i.gens``.
    :raises InvalidOrderingError: if ``ordering`` is not a permutation of ``G(I)`` or degrees decrease along it.
    """
    order = _resolve_ordering(i, ordering)
    if sorted(order) != sorted(i.gens):
        raise InvalidOrderingError(info="ordering must list every minimal generator exactly once")
    for j in range(1, len(order)):
        if degree(order[j]) < degree(order[j - 1]):
            raise InvalidOrderingError(info=f"degree decreases at step {j + 1}", step=j + 1)
    colons = []
    for j in range(1, len(order)):
        variables, gens = _colon_variables(order[:j], order[j], i.ambient)
        if variables is None:
            LOGGER.debug("linear quotients fail at step %d", j + 1)
            return QuotientCertificate(order, tuple(colons), False, (j + 1, gens))
        colons.append(variables)
    return QuotientCertificate(order, tuple(colons), True)


def depth_by_linear_quotients(cert: QuotientCertificate, n: int) -> int:
    """``depth S/I = n - q(I) - 1`` for an ideal with linear quotients."""
    if not cert.valid:
        raise InvalidOrderingError(info="certificate is not valid", step=cert.violation[0] if cert.violation else None)
    return n - cert.q - 1


def find_linear_quotients_order(i: MonomialIdeal, cap: int | None = None) -> QuotientCertificate | None:
    """Backtracking search for an order with linear quotients.

    Candidates of the smallest remaining degree are tried with the fewest new colon variables first. Since a
    colon depends only on the set of earlier generators, failed sets are remembered.

    :raises ResourceLimitError: when more than ``cap`` search nodes are visited.
    """
    cap = cap if cap is not None else options.CAP_SEARCH
    gens = i.gens
    if not gens:
        return None
    full = (1 << len(gens)) - 1
    dead: set[int] = set()
    nodes = 0

    def extend(chosen: int, order: list[int], colons: list[tuple[int, ...]]) -> bool:
        nonlocal nodes
        if chosen == full:
            return True
        if chosen in dead:
            return False
        nodes += 1
        if nodes > cap:
            raise ResourceLimitError("search", cap, {"nodes": nodes, "depth": len(order)})
        remaining = [k for k in range(len(gens)) if not chosen >> k & 1]
        low = min(degree(gens[k]) for k in remaining)
        candidates = []
        for k in remaining:
            if degree(gens[k]) != low:
                continue
            if not order:
                candidates.append(((), k))
                continue
            variables, _ = _colon_variables([gens[x] for x in order], gens[k], i.ambient)
            if variables is not None:
                candidates.append((variables, k))
        candidates.sort(key=lambda c: (len(c[0]), c[1]))
        for variables, k in candidates:
            order.append(k)
            if order[1:]:
                colons.append(variables)
            if extend(chosen | 1 << k, order, colons):
                return True
            order.pop()
            if order:
                colons.pop()
        dead.add(chosen)
        return False

    order: list[int] = []
    colons: list[tuple[int, ...]] = []
    found = extend(0, order, colons)
    LOGGER.debug("linear quotients search: %d nodes, found=%s", nodes, found)
    if not found:
        return None
    return QuotientCertificate(tuple(gens[k] for k in order), tuple(colons), True)


def partial_depth_bound(i: MonomialIdeal, prefix: Sequence, check_linear_resolution: bool = False) -> int:
    """Returns ``depth S/J = n - q(J) - 1`` for a prefix ``J`` of generators with linear quotients.

    When ``I`` is equigenerated with a linear resolution, ``projdim S/J <= projdim S/I``, so the value bounds
    ``depth S/I`` from above and equals it for the full sequence. A one generator prefix of ``(x1x2, x1x3, x2x3)``
    gives ``2`` while the depth is ``1``, so it is not a lower bound. Pass ``check_linear_resolution=True`` to let
    the oracle confirm the hypothesis.
    """
    order = _resolve_ordering(i, prefix)
    if not order or len(set(order)) != len(order) or any(u not in i.gens for u in order):
        raise InvalidOrderingError(info="prefix must be distinct minimal generators of the ideal")
    if check_linear_resolution:
        if not has_linear_resolution(i):
            raise UnsupportedInputError(info="ideal does not have a linear resolution")
    cert = verify_linear_quotients(MonomialIdeal(i.ambient, order), order)
    if not cert.valid:
        step, colon = cert.violation
        raise InvalidOrderingError(info=f"prefix fails linear quotients at step {step}", step=step, colon=colon)
    return i.n - cert.q - 1


def check_exchange(i: MonomialIdeal) -> tuple[bool, ExchangeWitness | None]:
    """Tests the polymatroid exchange property and returns the first failing witness."""
    if generating_degree(i) is None:
        return False, None
    members = set(i.gens)
    for u in i.gens:
        for v in i.gens:
            for k in range(i.n):
                if u[k] <= v[k]:
                    continue
                lowered = div(u, i.ambient.variable(k))
                j = next(
                    (j for j in range(i.n) if u[j] < v[j] and mul(lowered, i.ambient.variable(j)) in members), None
                )
                if j is None:
                    return False, ExchangeWitness(u, v, k)
    return True, None


def is_polymatroidal(i: MonomialIdeal) -> bool:
    return check_exchange(i)[0]


def revlex_key(u: Monomial) -> tuple[int, ...]:
    """Sort key with ``u >_rev v`` exactly when ``revlex_key(u) > revlex_key(v)`` for equal degrees."""
    return tuple(-a for a in reversed(u))


def revlex_order(i: MonomialIdeal) -> tuple[Monomial, ...]:
    """Generators by ascending degree, within a degree ``u_s <_rev ... <_rev u_1`` for ``x_1 > ... > x_n``."""
    return tuple(sorted(i.gens, key=lambda u: (degree(u), tuple(-a for a in revlex_key(u)))))

