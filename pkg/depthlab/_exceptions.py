"""Exceptions for the depthlab computations."""


class DepthLabException(Exception):
    """The base exception for all depthlab operation errors."""

    reason: str
    info: str

    def __init__(self, reason: str = "", info: str = ""):
        super(BaseException, self).__init__()
        self.reason = reason
        self.info = info

    def __str__(self):
        reason = f"[{self.reason}]" if self.reason else f"[{self.__class__.__name__}]"
        info = f" <{self.info}>" if self.info else ""
        return f"{reason}{info}"


class AmbientMismatchError(DepthLabException):
    """The exception that is thrown when monomials or ideals live over different variable sets."""

    def __init__(self, reason="Ambient mismatch", info: str = ""):
        super().__init__(reason=reason, info=info)


class ResourceLimitError(DepthLabException):
    """The exception that is thrown when a configured cap is exceeded.

    ``cap_name`` matches the ``DEPTHLAB_CAP_*`` suffix (lowercase) and ``stats`` holds progress counters.
    ``k`` is set when the error was raised while computing the ``k``-th power of a depth profile.
    """

    def __init__(self, cap_name: str, cap: int, stats: dict | None = None, k: int | None = None):
        self.cap_name = cap_name
        self.cap = cap
        self.stats = dict(stats or {})
        self.k = k
        super().__init__(reason="Resource limit", info=self._build_info())

    def _build_info(self) -> str:
        info = f"cap '{self.cap_name}'={self.cap} exceeded"
        if self.k is not None:
            info += f" at k={self.k}"
        if self.stats:
            info += "; " + ", ".join(f"{k}={v}" for k, v in sorted(self.stats.items()))
        return info

    def with_power(self, k: int) -> "ResourceLimitError":
        """Returns a copy of the error which remembers the power it happened at."""
        return ResourceLimitError(self.cap_name, self.cap, self.stats, k=k)


class InvalidOrderingError(DepthLabException):
    """The exception that is thrown when a generator ordering cannot be used for linear quotients."""

    def __init__(self, reason="Invalid ordering", info: str = "", step: int | None = None, colon: tuple = ()):
        self.step = step
        self.colon = tuple(colon)
        super().__init__(reason=reason, info=info)


class UnsupportedInputError(DepthLabException):
    """The exception that is thrown when an operation gets an ideal outside its documented scope."""

    def __init__(self, reason="Unsupported input", info: str = ""):
        super().__init__(reason=reason, info=info)


class UndefinedDimensionError(DepthLabException):
    """The exception that is thrown for the unit or zero ideal where a proper nonzero ideal is required."""

    def __init__(self, reason="Undefined dimension", info: str = ""):
        super().__init__(reason=reason, info=info)


class EmptyIdealError(DepthLabException):
    """The exception that is thrown when a builder ends up with no generators."""

    def __init__(self, reason="Empty ideal", info: str = ""):
        super().__init__(reason=reason, info=info)


class InvalidSpecError(DepthLabException):
    """The exception that is thrown when construction parameters violate a precondition.

    ``condition`` names the failed precondition.
    """

    def __init__(self, condition: str, info: str = ""):
        self.condition = condition
        super().__init__(reason=f"Invalid spec: {condition}", info=info)


class ParseError(DepthLabException):
    """The exception that is thrown for malformed input text, with 1-based ``line`` and ``column``."""

    def __init__(self, info: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__(reason=f"Parse error at {line}:{column}", info=info)


class ConsistencyError(DepthLabException):
    """The exception that is thrown when an internal invariant does not hold."""

    def __init__(self, reason="Internal consistency", info: str = ""):
        super().__init__(reason=reason, info=info)
