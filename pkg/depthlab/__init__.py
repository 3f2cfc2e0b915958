"""Depth functions of powers of monomial ideals: oracle, certificates, Rees algebra bounds and constructions."""

from . import constructions, options, rees
from ._config import Caps, RunConfig
from ._exceptions import (
    AmbientMismatchError,
    ConsistencyError,
    DepthLabException,
    EmptyIdealError,
    InvalidOrderingError,
    InvalidSpecError,
    ParseError,
    ResourceLimitError,
    UndefinedDimensionError,
    UnsupportedInputError,
)
from ._version import __version__
from .formats import format_ideal, parse_graph, parse_ideal, parse_poset
from .homology import HomologyField
from .lab import DepthLab
from .linquot import QuotientCertificate
from .monomials import Monomial, MonomialIdeal, VariableSet
from .oracle import BettiTable, DepthProfile
from .reports import ComparisonRow, Report
