"""Ideal families with known depth functions and the predictions that come with them."""

import dataclasses
import logging
import typing
from collections.abc import Sequence

from pydantic import BaseModel, Field

from .._exceptions import EmptyIdealError, InvalidSpecError
from ..monomials import Monomial, MonomialIdeal, VariableSet, contains, power
from .posets import Poset, hp_ideal, ordinal_sum, predicted_depth_hp, rank

LOGGER = logging.getLogger("depthlab.constructions.families")


class Prediction(BaseModel):
    """Sidecar document describing what a constructed ideal is expected to do."""

    family: str = Field(description="Construction family name.")
    parameters: dict = Field(default_factory=dict, description="Parameters the builder was called with.")
    profile: list[int] = Field(description="Predicted depth S/I^k for k = 1, 2, ...")
    tail: int | None = Field(None, description="Predicted value of every later power, when known.")
    citation: str = Field(description="Tag of the depth formula the prediction comes from.")
    caveat: str | None = Field(None, description="Set when the formula is applied outside its stated range.")
    kind: typing.Literal["exact", "lower-bound"] = Field("exact", description="How the profile relates to depth.")

    def at(self, k: int) -> int:
        """Predicted depth at power ``k`` (1-based), using the tail past the listed values."""
        if k <= len(self.profile):
            return self.profile[k - 1]
        if self.tail is None:
            raise IndexError(f"no prediction for k={k}")
        return self.tail

    def window(self, kmax: int) -> list[int]:
        return [self.at(k) for k in range(1, kmax + 1)]

    def holds(self, k: int, observed: int) -> bool:
        """Whether an observed depth at power ``k`` agrees with the prediction."""
        expected = self.at(k)
        return observed == expected if self.kind == "exact" else observed >= expected


@dataclasses.dataclass(frozen=True)
class VeroneseSpec:
    """Degree ``d`` monomials in ``n`` variables with ``a_i <= e_i``."""

    n: int
    d: int
    bounds: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bounds", tuple(self.bounds))
        if self.n < 1 or len(self.bounds) != self.n:
            raise InvalidSpecError("bound count", info=f"need {self.n} bounds, got {len(self.bounds)}")
        if self.d < 1:
            raise InvalidSpecError("positive degree", info=f"d={self.d}")
        if any(not 1 <= e <= self.d for e in self.bounds):
            raise InvalidSpecError("1 <= e_i <= d", info=f"bounds {self.bounds} with d={self.d}")
        if list(self.bounds) != sorted(self.bounds):
            raise InvalidSpecError("e_1 <= ... <= e_n", info=f"bounds {self.bounds}")

    @property
    def t(self) -> int:
        """``d + n - 1 - Σ e_i``, kept even when negative."""
        return self.d + self.n - 1 - sum(self.bounds)

    @property
    def negative_t(self) -> bool:
        return self.t < 0


def _bounded_monomials(d: int, bounds: Sequence[int]) -> list[Monomial]:
    if not bounds:
        return [()] if d == 0 else []
    head, rest = bounds[0], bounds[1:]
    room = sum(rest)
    result = []
    for a in range(min(head, d), -1, -1):
        if d - a <= room:
            result.extend((a,) + tail for tail in _bounded_monomials(d - a, rest))
    return result


def veronese_type(spec: VeroneseSpec) -> MonomialIdeal:
    gens = _bounded_monomials(spec.d, spec.bounds)
    if not gens:
        raise EmptyIdealError(info=f"Σ e_i = {sum(spec.bounds)} is smaller than d = {spec.d}")
    return MonomialIdeal(VariableSet.standard(spec.n), gens)


def predicted_depth_veronese(spec: VeroneseSpec) -> int:
    """``t``, clamped to ``max(0, t)``; check :py:attr:`VeroneseSpec.negative_t` for the clamped case."""
    return max(0, spec.t)


def veronese_prediction(spec: VeroneseSpec) -> Prediction:
    return Prediction(
        family="veronese",
        parameters={"n": spec.n, "d": spec.d, "bounds": list(spec.bounds)},
        profile=[predicted_depth_veronese(spec)],
        citation="veronese-type-depth",
        caveat=f"t = {spec.t} is negative, prediction clamped to 0" if spec.negative_t else None,
    )


def squarefree_veronese(n: int, d: int) -> MonomialIdeal:
    """``I_{n,d}``: all squarefree monomials of degree ``d``."""
    if not 2 <= d < n:
        raise InvalidSpecError("2 <= d < n", info=f"n={n}, d={d}")
    return veronese_type(VeroneseSpec(n, d, (1,) * n))


def predicted_sqfree_veronese(n: int, d: int, k: int) -> int:
    """``max{0, n - k(n - d) - 1}``."""
    return max(0, n - k * (n - d) - 1)


def squarefree_veronese_prediction(n: int, d: int, kmax: int) -> Prediction:
    return Prediction(
        family="sqfree-veronese",
        parameters={"n": n, "d": d},
        profile=[predicted_sqfree_veronese(n, d, k) for k in range(1, kmax + 1)],
        tail=0 if predicted_sqfree_veronese(n, d, kmax) == 0 else None,
        citation="squarefree-veronese-powers",
    )


def prescribed_depth_dim(d: int, t: int) -> MonomialIdeal:
    """Polymatroidal ideal with ``dim S/I = d`` and ``depth S/I = t``, as the power ``I_{n,n-1}^k``.

    Here ``n = d + 2`` and ``k = n - t - 1``, written as the Veronese type ideal of degree ``k(n - 1)`` with all
    bounds ``k``.
    """
    if not 0 <= t <= d:
        raise InvalidSpecError("0 <= t <= d", info=f"d={d}, t={t}")
    n = d + 2
    k = n - t - 1
    return veronese_type(VeroneseSpec(n, k * (n - 1), (k,) * n))


@dataclasses.dataclass(frozen=True)
class DepthFunctionSpec:
    """Target depth function given by its first values; the last value repeats forever.

    Increasing specs list ``f(1), f(2), ...``; decreasing specs list ``f(0), f(1), ...``.
    """

    values: tuple[int, ...]
    increasing: bool

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if not self.values:
            raise InvalidSpecError("nonempty values")
        if any(v < 0 for v in self.values):
            raise InvalidSpecError("nonnegative values", info=f"{list(self.values)}")

    @classmethod
    def parse(cls, text: str, increasing: bool) -> "DepthFunctionSpec":
        try:
            return cls(tuple(int(v) for v in text.replace(" ", "").split(",") if v), increasing)
        except ValueError as e:
            raise InvalidSpecError("integer values", info=text) from e

    @property
    def limit(self) -> int:
        return self.values[-1]

    def f(self, k: int) -> int:
        """Value at ``k``, counting from the first listed index."""
        first = 1 if self.increasing else 0
        index = k - first
        if index < 0:
            raise IndexError(k)
        return self.values[min(index, len(self.values) - 1)]

    # increasing functions

    def stabilization(self) -> int:
        """``d`` such that ``f(k) = lim f`` exactly for ``k >= d - 1``."""
        first = len(self.values)
        while first > 1 and self.values[first - 2] == self.limit:
            first -= 1
        return first + 1

    def c(self) -> dict[int, int]:
        """``c_{d-k} = n - f(k)`` for ``k = 1..d-2``."""
        d = self.stabilization()
        return {d - k: self.limit - self.f(k) for k in range(1, d - 1)}

    def validate_increasing(self) -> None:
        if not self.increasing:
            raise InvalidSpecError("increasing spec expected")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise InvalidSpecError("f increasing", info=f"{list(self.values)}")
        if self.stabilization() < 3:
            raise InvalidSpecError("d >= 3", info="f must reach its limit no earlier than k = 2")

    # decreasing functions

    def steps(self) -> list[int]:
        """``a_k = f(k-1) - f(k)`` up to the last positive one."""
        a = [x - y for x, y in zip(self.values, self.values[1:])]
        while a and a[-1] == 0:
            a.pop()
        return a

    def validate_decreasing(self) -> None:
        if self.increasing:
            raise InvalidSpecError("decreasing spec expected")
        if len(self.values) < 2:
            raise InvalidSpecError("f(0) and f(1) given")
        if any(a < b for a, b in zip(self.values, self.values[1:])):
            raise InvalidSpecError("f decreasing", info=f"{list(self.values)}")
        steps = self.steps()
        if any(a < b for a, b in zip(steps, steps[1:])):
            raise InvalidSpecError("Δf decreasing", info=f"steps {steps}")
        if any(a == 0 for a in steps):
            raise InvalidSpecError("Δf decreasing", info=f"steps {steps} vanish before the last positive one")
        if self.values[0] != 2 * self.limit + 1:
            raise InvalidSpecError("f(0) = 2 lim f + 1", info=f"f(0)={self.values[0]}, lim={self.limit}")

    def predicted_profile(self, kmax: int) -> list[int]:
        return [self.f(k) for k in range(1, kmax + 1)]


def ideal_for_decreasing_f(spec: DepthFunctionSpec) -> MonomialIdeal:
    """``H_P`` for the ordinal sum of antichains of sizes ``a_k = f(k-1) - f(k)``."""
    spec.validate_decreasing()
    return hp_ideal(decreasing_f_poset(spec))


def decreasing_f_poset(spec: DepthFunctionSpec) -> Poset:
    spec.validate_decreasing()
    return ordinal_sum(spec.steps())


def staircase_variables(n: int) -> VariableSet:
    return VariableSet(["x1", "x2"] + [f"y{i}" for i in range(1, n + 1)])


def ideal_for_increasing_f(spec: DepthFunctionSpec) -> MonomialIdeal:
    """Staircase ideal in ``x1, x2, y1..yn`` whose depth function is ``f``.

    It is generated by ``x1^{d+1}, x1^d x2, x1 x2^d, x2^{d+1}`` together with ``x1^{d-1} x2^j y_l`` for
    ``j = 2..d-1`` and ``l <= c_j``.
    """
    spec.validate_increasing()
    n, d = spec.limit, spec.stabilization()
    ambient = staircase_variables(n)
    pad = (0,) * n

    def mono(a: int, b: int, y: int | None = None) -> Monomial:
        tail = list(pad)
        if y is not None:
            tail[y] = 1
        return (a, b, *tail)

    gens = [mono(d + 1, 0), mono(d, 1), mono(1, d), mono(0, d + 1)]
    for j, c in sorted(spec.c().items()):
        gens.extend(mono(d - 1, j, y) for y in range(c))
    LOGGER.debug("staircase ideal: n=%d d=%d c=%s", n, d, spec.c())
    return MonomialIdeal(ambient, gens)


def staircase_witness(spec: DepthFunctionSpec, k: int) -> Monomial:
    """``x1^{kd-1} x2^{d-1}``, a socle-type element of ``S/I^k`` for ``k <= d - 2``."""
    n, d = spec.limit, spec.stabilization()
    return (k * d - 1, d - 1) + (0,) * n


def staircase_witness_holds(spec: DepthFunctionSpec, k: int) -> bool:
    """The witness is outside ``I^k`` while its products with ``x1, x2, y_1..y_{c_{d-k}}`` lie inside."""
    i = ideal_for_increasing_f(spec)
    ik = power(i, k)
    w = staircase_witness(spec, k)
    d = spec.stabilization()
    if contains(ik, w):
        return False
    for v in range(2 + spec.c().get(d - k, 0)):
        shifted = list(w)
        shifted[v] += 1
        if not contains(ik, tuple(shifted)):
            return False
    return True


def depth_function_prediction(spec: DepthFunctionSpec, kmax: int) -> Prediction:
    if spec.increasing:
        return Prediction(
            family="staircase",
            parameters={"f": list(spec.values)},
            profile=spec.predicted_profile(kmax),
            tail=spec.limit,
            citation="staircase-increasing",
        )
    return Prediction(
        family="decreasing",
        parameters={"f": list(spec.values), "sizes": spec.steps()},
        profile=spec.predicted_profile(kmax),
        tail=spec.limit,
        citation="ordinal-sum",
    )


NONMONOTONE_VARIABLES = VariableSet("abcdef")


def nonmonotone_example() -> MonomialIdeal:
    """``(a^6, a^5b, ab^5, b^6, a^4b^4c, a^4b^4d, a^4e^2f^3, b^4e^3f^2)`` in ``K[a..f]``."""
    gens = [
        (6, 0, 0, 0, 0, 0),
        (5, 1, 0, 0, 0, 0),
        (1, 5, 0, 0, 0, 0),
        (0, 6, 0, 0, 0, 0),
        (4, 4, 1, 0, 0, 0),
        (4, 4, 0, 1, 0, 0),
        (4, 0, 0, 0, 2, 3),
        (0, 4, 0, 0, 3, 2),
    ]
    return MonomialIdeal(NONMONOTONE_VARIABLES, gens)


def nonmonotone_prediction() -> Prediction:
    return Prediction(family="nonmonotone", profile=[0, 1, 0, 2, 2], citation="nonmonotone")


def poset_prediction(p: Poset, kmax: int) -> Prediction:
    """``2n - δ(P;k) - 1``, settling at ``n - 1`` from ``k = rank(P) + 1`` on."""
    return Prediction(
        family="poset",
        parameters={"elements": list(p.names), "covers": [list(c) for c in p.cover_relations()], "rank": rank(p)},
        profile=[predicted_depth_hp(p, k) for k in range(1, kmax + 1)],
        tail=p.n - 1,
        citation="poset-delta",
    )
