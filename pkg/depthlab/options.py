"""Options to change depthlab's runtime behavior.

Each setting is read once, when **depthlab** is imported, and is used as the default for every cap argument that
is not passed explicitly. Values given to :py:meth:`~depthlab.RunConfig.from_env` or as command line flags have
higher priority than this.
"""

from os import environ

from dotenv import load_dotenv

load_dotenv()


def _int_option(name: str, default: int) -> int:
    try:
        value = int(environ.get(name, default))
    except (TypeError, ValueError):
        return default
    return value if value > 0 else default


CAP_LATTICE: int = _int_option("DEPTHLAB_CAP_LATTICE", 200_000)
"""Maximal number of multidegrees in an lcm lattice."""

CAP_BUCHBERGER: int = _int_option("DEPTHLAB_CAP_BUCHBERGER", 100_000)
"""Maximal number of S-pair reductions in one Buchberger run."""

CAP_DELTA: int = _int_option("DEPTHLAB_CAP_DELTA", 14)
"""Largest poset size accepted by the acceptable-sequence search."""

CAP_SEARCH: int = _int_option("DEPTHLAB_CAP_SEARCH", 200_000)
"""Maximal number of nodes visited by the linear quotients ordering search."""

CAP_POSET_IDEALS: int = _int_option("DEPTHLAB_CAP_POSET_IDEALS", 100_000)
"""Maximal number of poset ideals enumerated for one poset."""

FIELD: str = environ.get("DEPTHLAB_FIELD", "q")
"""Homology field: ``q`` for the rationals or ``p:<prime>``."""

KMAX: int = _int_option("DEPTHLAB_KMAX", 3)
"""Default number of powers in a depth profile."""

SEED: int = _int_option("DEPTHLAB_SEED", 2009)
"""Default seed of the randomized sweeps."""
