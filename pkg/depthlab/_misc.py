"""Different miscellaneous helper functions.

For internal use, prototypes can change between versions.
"""

import hashlib
from collections.abc import Iterable


def inputs_digest(texts: Iterable[str]) -> str:
    """Returns a short SHA-256 digest of the given input texts."""
    digest = hashlib.sha256()
    for text in texts:
        digest.update(text.encode("utf-8"))
        digest.update(b"\0")
    return digest.hexdigest()[:16]


def parse_int_list(text: str) -> list[int]:
    """Parses ``"1,2, 3"`` into ``[1, 2, 3]``; raises ``ValueError`` on anything else."""
    return [int(v) for v in text.replace(" ", "").split(",") if v]


def format_int_list(values: Iterable[int]) -> str:
    return ",".join(str(v) for v in values)
