"""Toric ideal of the Rees algebra, the x-condition and the depth bounds it yields."""

import dataclasses
import itertools
import logging
from collections.abc import Sequence

from sympy import Matrix

from .._exceptions import ConsistencyError, UnsupportedInputError
from ..linquot import QuotientCertificate, verify_linear_quotients
from ..monomials import Monomial, MonomialIdeal, VariableSet, generating_degree, lcm, mul, power
from ..oracle import DepthProfile, depth_profile
from .groebner import Binomial, GroebnerBasis, buchberger
from .orders import ReesVariableSet, TermOrder, YOrder

LOGGER = logging.getLogger("depthlab.rees.toric")


def rees_order(
    i: MonomialIdeal, y_order: YOrder | str = YOrder.LEX, y_priority: Sequence[int] = ()
) -> TermOrder:
    """Block order ``<#_lex`` on the ``t``-free ring of ``I``'s Rees presentation."""
    return TermOrder(ReesVariableSet(i.ambient, len(i.gens)), YOrder(y_order), tuple(y_priority))


def _elimination_gens(i: MonomialIdeal, order: TermOrder) -> list[Binomial]:
    variables = order.variables
    gens = []
    for j, u in enumerate(i.gens):
        y = [0] * variables.m
        y[j] = 1
        lifted = variables.join((0,) * variables.m, u, t=1)
        gens.append(Binomial.oriented(variables.join(y, (0,) * i.n), lifted, order))
    return gens


def rees_groebner(
    i: MonomialIdeal,
    y_order: YOrder | str = YOrder.LEX,
    y_priority: Sequence[int] = (),
    cap: int | None = None,
) -> GroebnerBasis:
    """Reduced Gröbner basis of ``J_R(I)`` under the block order.

    ``t`` is eliminated from ``y_j - u_j t``; the ``t``-free members of the reduced basis generate the kernel and
    already form its reduced basis for the restricted order.
    """
    if i.is_zero:
        raise UnsupportedInputError(info="Rees algebra of the zero ideal")
    order = rees_order(i, y_order, y_priority)
    elimination = order.with_elimination()
    full = buchberger(_elimination_gens(i, elimination), elimination, cap)
    kernel = tuple(Binomial(g.lead[1:], g.trail[1:]) for g in full.elements if g.lead[0] == 0 and g.trail[0] == 0)
    kernel = tuple(sorted(kernel, key=lambda g: order.key(g.lead)))
    LOGGER.debug("rees kernel: %d of %d basis elements are t-free", len(kernel), len(full.elements))
    return GroebnerBasis(kernel, order, True, dict(full.stats))


def rees_kernel(i: MonomialIdeal, cap: int | None = None) -> tuple[Binomial, ...]:
    """Binomial generators of ``ker(y_u -> u t, x_i -> x_i)``."""
    return rees_groebner(i, cap=cap).elements


def rees_projection(i: MonomialIdeal, u: Monomial) -> tuple[int, Monomial]:
    """Image of a monomial of the ``t``-free Rees ring as ``(t degree, x monomial)``."""
    variables = ReesVariableSet(i.ambient, len(i.gens))
    _, y, x = variables.split(u)
    image = tuple(x)
    for j, e in enumerate(y):
        for _ in range(e):
            image = mul(image, i.gens[j])
    return sum(y), image


def rees_projection_is_zero(i: MonomialIdeal, f: Binomial) -> bool:
    """Substitution check that ``f`` lies in the kernel."""
    return rees_projection(i, f.lead) == rees_projection(i, f.trail)


def initial_ideal(gb: GroebnerBasis) -> MonomialIdeal:
    return MonomialIdeal(gb.order.variables.as_variable_set(), gb.leads)


def _x_degree(gb: GroebnerBasis, u: Monomial) -> int:
    return sum(u[gb.order.variables.x_slice])


def x_condition(gb: GroebnerBasis) -> bool:
    """Every basis element is at most linear in the ``x`` variables."""
    return all(_x_degree(gb, g.lead) <= 1 and _x_degree(gb, g.trail) <= 1 for g in gb.elements)


def rho(gb: GroebnerBasis, a: Sequence[int]) -> int:
    """Number of variables ``x_i`` with ``x_i y^a`` in the initial ideal."""
    variables = gb.order.variables
    if len(a) != variables.m:
        raise ValueError(f"y multidegree {tuple(a)} does not have {variables.m} entries")
    count = 0
    for k in range(variables.x.n):
        x = [0] * variables.x.n
        x[k] = 1
        if gb.in_initial_ideal(variables.join(a, x)):
            count += 1
    return count


def _compositions(total: int, parts: int):
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        previous = -1
        result = []
        for b in bars:
            result.append(b - previous - 1)
            previous = b
        result.append(total + parts - 2 - previous)
        yield tuple(result)


@dataclasses.dataclass(frozen=True)
class DepthBounds:
    """Lower bounds ``n - max ρ(a) - 1`` for ``|a| = k`` and the bound ``n - ρ(c) - 1`` for the limit."""

    per_power: tuple[int, ...]
    """Unfloored bounds for ``k = 1..kmax``"""
    limit: int
    c: Monomial
    """lcm of the ``y`` parts of initial generators that contain an ``x``"""

    def reported(self, k: int) -> int:
        """Bound for power ``k`` floored at ``0``."""
        return max(0, self.per_power[k - 1])

    @property
    def reported_limit(self) -> int:
        return max(0, self.limit)


def depth_lower_bounds(gb: GroebnerBasis, kmax: int) -> DepthBounds:
    if not x_condition(gb):
        raise UnsupportedInputError(info="depth bounds need the x-condition")
    variables = gb.order.variables
    n, m = variables.x.n, variables.m
    per_power = []
    for k in range(1, kmax + 1):
        best = max((rho(gb, a) for a in _compositions(k, m)), default=0)
        per_power.append(n - best - 1)
    c: Monomial = (0,) * m
    for lead in gb.leads:
        _, y, x = variables.split(lead)
        if any(x):
            c = lcm(c, y)
    return DepthBounds(tuple(per_power), n - rho(gb, c) - 1, c)


def standard_expression(i: MonomialIdeal, w: Monomial, k: int, gb: GroebnerBasis) -> Monomial:
    """The standard ``y`` monomial of degree ``k`` that maps to the generator ``w`` of ``I^k``."""
    variables = gb.order.variables
    start = _factorization(i, w, k)
    if start is None:
        raise ConsistencyError(info=f"{w} is not a product of {k} generators")
    standard = gb.normal_form(variables.join(start, (0,) * i.n))
    _, y, x = variables.split(standard)
    if any(x):
        raise ConsistencyError(info=f"normal form of a factorization of {w} is not pure in y")
    return y


def _factorization(i: MonomialIdeal, w: Monomial, k: int) -> tuple[int, ...] | None:
    m = len(i.gens)

    def search(rest: Monomial, left: int, first: int, counts: list[int]):
        if left == 0:
            return tuple(counts) if not any(rest) else None
        for j in range(first, m):
            u = i.gens[j]
            if all(a <= b for a, b in zip(u, rest)):
                counts[j] += 1
                found = search(tuple(b - a for a, b in zip(u, rest)), left - 1, j, counts)
                if found is not None:
                    return found
                counts[j] -= 1
        return None

    return search(w, k, 0, [0] * m)


def standard_expression_order(i: MonomialIdeal, k: int, gb: GroebnerBasis) -> tuple[Monomial, ...]:
    """Orders ``G(I^k)`` ascending by ``<#`` on standard expressions.

    Under the x-condition this order has linear quotients.
    """
    if not x_condition(gb):
        raise UnsupportedInputError(info="standard expression order needs the x-condition")
    keyed = []
    for w in power(i, k).gens:
        keyed.append((gb.order.y_key(standard_expression(i, w, k, gb)), w))
    keyed.sort()
    return tuple(w for _, w in keyed)


def standard_order_certificate(i: MonomialIdeal, k: int, gb: GroebnerBasis) -> QuotientCertificate:
    return verify_linear_quotients(power(i, k), standard_expression_order(i, k, gb))


def analytic_spread(i: MonomialIdeal) -> int:
    """Rank of the exponent matrix of ``G(I)``, the fiber cone dimension of an equigenerated ideal."""
    if generating_degree(i) is None:
        raise UnsupportedInputError(info="analytic spread is computed for equigenerated ideals only")
    return Matrix([list(u) for u in i.gens]).rank()


@dataclasses.dataclass(frozen=True)
class SpreadBoundCheck:
    """Comparison of a depth profile against ``n - ℓ(I)``."""

    spread: int
    bound: int
    min_depth: int
    tail: int
    min_ok: bool
    tail_ok: bool

    @property
    def ok(self) -> bool:
        return self.min_ok and self.tail_ok

    @property
    def tight(self) -> bool:
        return self.tail == self.bound


def spread_bound_check(
    i: MonomialIdeal, kmax: int, profile: DepthProfile | None = None, **oracle_kwargs
) -> SpreadBoundCheck:
    """Checks ``min_k depth S/I^k <= n - ℓ(I)`` and the same for the observed tail of the profile."""
    if profile is None:
        profile = depth_profile(i, kmax, **oracle_kwargs)
    spread = analytic_spread(i)
    bound = i.n - spread
    low = min(profile.values)
    tail = profile.values[-1]
    return SpreadBoundCheck(spread, bound, low, tail, low <= bound, tail <= bound)


def edge_ideal_y_order(i: MonomialIdeal, vertex_order: Sequence[int]) -> tuple[int, ...]:
    """``y`` priority for an edge ideal: ``y_{a,b} > y_{p,q}`` when ``(a, b)`` precedes ``(p, q)`` lexicographically.

    Vertices are ranked by their position in ``vertex_order`` (0-based variable indices), each edge is written with
    its better ranked vertex first.
    """
    rank = {v: r for r, v in enumerate(vertex_order)}
    if sorted(rank) != list(range(i.n)):
        raise ValueError("vertex order must be a permutation of the variables")

    def edge_key(j: int) -> tuple[int, int]:
        ends = [k for k, a in enumerate(i.gens[j]) if a]
        if len(ends) != 2 or any(i.gens[j][k] != 1 for k in ends):
            raise UnsupportedInputError(info="edge ideal generators must be squarefree quadrics")
        return tuple(sorted(rank[k] for k in ends))

    return tuple(sorted(range(len(i.gens)), key=edge_key))


def rees_variables(i: MonomialIdeal) -> VariableSet:
    return ReesVariableSet(i.ambient, len(i.gens)).as_variable_set()
