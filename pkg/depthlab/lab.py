"""DepthLab class providing access to all computations with one shared run configuration."""

from collections.abc import Sequence

from ._config import RunConfig
from .constructions import families, graphs, posets
from .constructions.families import DepthFunctionSpec, Prediction, VeroneseSpec
from .constructions.graphs import Graph
from .constructions.posets import AntichainSequence, Poset
from .linquot import (
    QuotientCertificate,
    check_exchange,
    depth_by_linear_quotients,
    find_linear_quotients_order,
    partial_depth_bound,
    revlex_order,
    verify_linear_quotients,
)
from .monomials import MonomialIdeal, power
from .oracle import (
    BettiTable,
    DepthProfile,
    betti_table,
    depth_profile,
    depth_quotient_oracle,
    has_linear_resolution,
    is_cohen_macaulay,
    linear_strand,
)
from .rees import (
    DepthBounds,
    GroebnerBasis,
    SpreadBoundCheck,
    YOrder,
    depth_lower_bounds,
    edge_ideal_y_order,
    rees_groebner,
    spread_bound_check,
    standard_expression_order,
    standard_order_certificate,
    x_condition,
)


class _OracleAPI:
    """Betti numbers and depths computed from upper Koszul complexes."""

    def __init__(self, config: RunConfig):
        self._config = config

    def betti(self, i: MonomialIdeal) -> BettiTable:
        return betti_table(i, self._config.homology_field, self._config.caps.lattice)

    def depth(self, i: MonomialIdeal) -> int:
        """Returns ``depth S/I``."""
        return depth_quotient_oracle(i, self._config.homology_field, self._config.caps.lattice)

    def profile(self, i: MonomialIdeal, kmax: int | None = None) -> DepthProfile:
        """Returns ``depth S/I^k`` for ``k = 1..kmax``, ``kmax`` defaults to the configured one."""
        return depth_profile(i, kmax or self._config.kmax, self._config.homology_field, self._config.caps.lattice)

    def has_linear_resolution(self, i: MonomialIdeal) -> bool:
        return has_linear_resolution(i, self._config.homology_field, self._config.caps.lattice)

    def linear_strand(self, i: MonomialIdeal) -> list[int]:
        return linear_strand(i, self._config.homology_field, self._config.caps.lattice)

    def is_cohen_macaulay(self, i: MonomialIdeal) -> bool:
        return is_cohen_macaulay(i, self._config.homology_field, self._config.caps.lattice)


class _LinearQuotientsAPI:
    """Linear quotients certificates and the depth they give."""

    def __init__(self, config: RunConfig):
        self._config = config

    def verify(self, i: MonomialIdeal, ordering: Sequence) -> QuotientCertificate:
        return verify_linear_quotients(i, ordering)

    def search(self, i: MonomialIdeal) -> QuotientCertificate | None:
        return find_linear_quotients_order(i, self._config.caps.search)

    def revlex(self, i: MonomialIdeal) -> QuotientCertificate:
        """Checks the reverse lexicographic order, which works for every polymatroidal ideal."""
        return verify_linear_quotients(i, revlex_order(i))

    def poset_power(self, p: Poset, k: int) -> QuotientCertificate:
        """Checks the multichain order on ``H_P^k``."""
        gens = posets.hp_power_order(p, k, self._config.caps.poset_ideals)
        return verify_linear_quotients(power(posets.hp_ideal(p, self._config.caps.poset_ideals), k), gens)

    @staticmethod
    def depth(cert: QuotientCertificate, n: int) -> int:
        return depth_by_linear_quotients(cert, n)

    @staticmethod
    def partial_bound(i: MonomialIdeal, prefix: Sequence) -> int:
        return partial_depth_bound(i, prefix)

    @staticmethod
    def is_polymatroidal(i: MonomialIdeal) -> bool:
        return check_exchange(i)[0]


class _ToricAPI:
    """Gröbner bases of Rees algebras, the x-condition and the bounds it gives."""

    def __init__(self, config: RunConfig):
        self._config = config

    def groebner(
        self, i: MonomialIdeal, y_order: YOrder | str = YOrder.LEX, y_priority: Sequence[int] = ()
    ) -> GroebnerBasis:
        return rees_groebner(i, y_order, y_priority, self._config.caps.buchberger)

    def edge_groebner(
        self, i: MonomialIdeal, vertex_order: Sequence[int] | None = None, y_order: YOrder | str = YOrder.REVLEX
    ) -> GroebnerBasis:
        """Basis for an edge ideal with ``y`` ranked by its edges in ``vertex_order``."""
        vertex_order = range(i.n) if vertex_order is None else vertex_order
        return self.groebner(i, y_order, edge_ideal_y_order(i, vertex_order))

    @staticmethod
    def x_condition(gb: GroebnerBasis) -> bool:
        return x_condition(gb)

    def bounds(self, gb: GroebnerBasis, kmax: int | None = None) -> DepthBounds:
        return depth_lower_bounds(gb, kmax or self._config.kmax)

    @staticmethod
    def standard_order(i: MonomialIdeal, k: int, gb: GroebnerBasis):
        return standard_expression_order(i, k, gb)

    @staticmethod
    def standard_certificate(i: MonomialIdeal, k: int, gb: GroebnerBasis) -> QuotientCertificate:
        return standard_order_certificate(i, k, gb)

    def spread_check(self, i: MonomialIdeal, profile: DepthProfile | None = None) -> SpreadBoundCheck:
        return spread_bound_check(
            i,
            self._config.kmax,
            profile,
            field=self._config.homology_field,
            lattice_cap=self._config.caps.lattice,
        )


class _ConstructAPI:
    """Ideal families, each returned together with its predicted depth function."""

    def __init__(self, config: RunConfig):
        self._config = config

    def veronese(self, n: int, d: int, bounds: Sequence[int]) -> tuple[MonomialIdeal, Prediction]:
        spec = VeroneseSpec(n, d, tuple(bounds))
        return families.veronese_type(spec), families.veronese_prediction(spec)

    def sqfree_veronese(self, n: int, d: int) -> tuple[MonomialIdeal, Prediction]:
        return families.squarefree_veronese(n, d), families.squarefree_veronese_prediction(n, d, self._config.kmax)

    def prescribed(self, d: int, t: int) -> tuple[MonomialIdeal, Prediction]:
        """Polymatroidal ideal with ``dim S/I = d`` and ``depth S/I = t``."""
        i = families.prescribed_depth_dim(d, t)
        prediction = Prediction(
            family="prescribed",
            parameters={"d": d, "t": t},
            profile=[t],
            citation="veronese-type-depth",
        )
        return i, prediction

    def edge(self, g: Graph, vertex_order: Sequence[int] | None = None) -> tuple[MonomialIdeal, Prediction | None]:
        """Edge ideal with the x-condition lower bounds as prediction, ``None`` when the x-condition fails."""
        i = graphs.edge_ideal(g)
        vertex_order = list(range(g.n)) if vertex_order is None else list(vertex_order)
        gb = rees_groebner(i, YOrder.REVLEX, edge_ideal_y_order(i, vertex_order), self._config.caps.buchberger)
        if not x_condition(gb):
            return i, None
        bounds = depth_lower_bounds(gb, self._config.kmax)
        prediction = Prediction(
            family="edge",
            parameters={"vertices": g.n, "edges": [[a + 1, b + 1] for a, b in g.sorted_edges()]},
            profile=[bounds.reported(k) for k in range(1, self._config.kmax + 1)],
            tail=bounds.reported_limit,
            citation="x-condition-bounds",
            kind="lower-bound",
        )
        return i, prediction

    def poset(self, p: Poset) -> tuple[MonomialIdeal, Prediction]:
        return (
            posets.hp_ideal(p, self._config.caps.poset_ideals),
            families.poset_prediction(p, self._config.kmax),
        )

    def delta(self, p: Poset, k: int) -> tuple[int, AntichainSequence]:
        return posets.delta(p, k, self._config.caps.delta)

    def decreasing(self, f: DepthFunctionSpec | str) -> tuple[MonomialIdeal, Prediction]:
        spec = DepthFunctionSpec.parse(f, increasing=False) if isinstance(f, str) else f
        return families.ideal_for_decreasing_f(spec), families.depth_function_prediction(spec, self._config.kmax)

    def staircase(self, f: DepthFunctionSpec | str) -> tuple[MonomialIdeal, Prediction]:
        spec = DepthFunctionSpec.parse(f, increasing=True) if isinstance(f, str) else f
        return families.ideal_for_increasing_f(spec), families.depth_function_prediction(spec, self._config.kmax)

    @staticmethod
    def nonmonotone() -> tuple[MonomialIdeal, Prediction]:
        return families.nonmonotone_example(), families.nonmonotone_prediction()


class DepthLab:
    """Entry point of the library: every API group shares :py:attr:`config`."""

    config: RunConfig
    """Homology field, number of powers and resource caps"""
    oracle: _OracleAPI
    """Betti tables, depths and depth profiles"""
    linquot: _LinearQuotientsAPI
    """Linear quotients verification and search"""
    toric: _ToricAPI
    """Rees algebra Gröbner bases and depth bounds"""
    construct: _ConstructAPI
    """Families with known depth functions"""

    def __init__(self, config: RunConfig | None = None, **kwargs):
        """If ``config`` is not given, it is built from ``kwargs`` and the ``DEPTHLAB_*`` environment."""
        self.config = config if config is not None else RunConfig.from_env(**kwargs)
        self.oracle = _OracleAPI(self.config)
        self.linquot = _LinearQuotientsAPI(self.config)
        self.toric = _ToricAPI(self.config)
        self.construct = _ConstructAPI(self.config)
