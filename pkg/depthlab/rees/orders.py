"""Variables of the Rees presentation ring and the block term orders used on it."""

import dataclasses
import enum
from collections.abc import Sequence

from ..monomials import Monomial, VariableSet


@dataclasses.dataclass(frozen=True)
class ReesVariableSet:
    """Variables ``(t?, y1..ym, x1..xn)`` of the ring presenting the Rees algebra.

    ``y_j`` stands for the ``j``-th generator of ``G(I)`` in the order the ideal stores them.
    """

    x: VariableSet
    """Variables of the base ring"""
    m: int
    """Number of ``y`` variables"""
    with_t: bool = False
    """Whether the elimination variable ``t`` is present (first position)"""

    @property
    def offset(self) -> int:
        return 1 if self.with_t else 0

    @property
    def size(self) -> int:
        return self.offset + self.m + self.x.n

    @property
    def y_slice(self) -> slice:
        return slice(self.offset, self.offset + self.m)

    @property
    def x_slice(self) -> slice:
        return slice(self.offset + self.m, self.size)

    @property
    def y_prefix(self) -> str:
        """``y`` unless the base ring already uses names like ``y1``."""
        taken = set(self.x.names) | {"t"}
        for prefix in ("y", "w", "z", "Y"):
            if not any(f"{prefix}{j}" in taken for j in range(1, self.m + 1)):
                return prefix
        raise ValueError("no free prefix for the Rees variables")

    @property
    def names(self) -> tuple[str, ...]:
        head = ("t",) if self.with_t else ()
        return head + tuple(f"{self.y_prefix}{j}" for j in range(1, self.m + 1)) + self.x.names

    def as_variable_set(self) -> VariableSet:
        return VariableSet(self.names)

    def without_t(self) -> "ReesVariableSet":
        return ReesVariableSet(self.x, self.m, False)

    def split(self, u: Monomial) -> tuple[int, Monomial, Monomial]:
        """Returns the ``t`` exponent, the ``y`` part and the ``x`` part of ``u``."""
        return (u[0] if self.with_t else 0), u[self.y_slice], u[self.x_slice]

    def join(self, y: Sequence[int], x: Sequence[int], t: int = 0) -> Monomial:
        if len(y) != self.m or len(x) != self.x.n:
            raise ValueError("block sizes do not match the variable set")
        head = (t,) if self.with_t else ()
        return head + tuple(y) + tuple(x)

    def y_variable(self, j: int) -> Monomial:
        y = [0] * self.m
        y[j] = 1
        return self.join(y, (0,) * self.x.n)


class YOrder(enum.Enum):
    """Order ``<#`` on the ``y`` monomials."""

    LEX = "lex"
    REVLEX = "revlex"
    """Degree reverse lexicographic"""


@dataclasses.dataclass(frozen=True)
class TermOrder:
    """Block order on a :py:class:`ReesVariableSet`.

    The ``y`` part is compared first by ``<#`` over ``y_priority`` (greatest first), ties are broken by
    lexicographic comparison of the ``x`` part. With ``t`` present it forms a block of its own above everything.
    """

    variables: ReesVariableSet
    y_order: YOrder = YOrder.LEX
    y_priority: tuple[int, ...] = ()
    """Permutation of ``y`` indices, greatest first; empty means ``y1 > y2 > ...``"""

    def __post_init__(self):
        priority = self.y_priority or tuple(range(self.variables.m))
        if sorted(priority) != list(range(self.variables.m)):
            raise ValueError(f"y priority {priority} is not a permutation of {self.variables.m} variables")
        object.__setattr__(self, "y_priority", tuple(priority))

    @property
    def is_elimination(self) -> bool:
        return self.variables.with_t

    def y_key(self, y: Sequence[int]) -> tuple:
        if self.y_order is YOrder.LEX:
            return tuple(y[p] for p in self.y_priority)
        return (sum(y),) + tuple(-y[p] for p in reversed(self.y_priority))

    def key(self, u: Monomial) -> tuple:
        """Sort key that is larger exactly for the larger monomial."""
        t, y, x = self.variables.split(u)
        return (t, self.y_key(y), tuple(x))

    def greater(self, u: Monomial, v: Monomial) -> bool:
        return self.key(u) > self.key(v)

    def restricted(self) -> "TermOrder":
        """The same order on the ``t``-free subring."""
        return TermOrder(self.variables.without_t(), self.y_order, self.y_priority)

    def with_elimination(self) -> "TermOrder":
        return TermOrder(ReesVariableSet(self.variables.x, self.variables.m, True), self.y_order, self.y_priority)

    def describe(self) -> str:
        names = [f"{self.variables.y_prefix}{p + 1}" for p in self.y_priority]
        head = "t >> " if self.is_elimination else ""
        return f"{head}{self.y_order.value}({' > '.join(names)}) >> lex({' > '.join(self.variables.x.names)})"
