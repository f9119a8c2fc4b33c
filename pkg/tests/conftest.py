from __future__ import annotations

from functools import lru_cache

from monosig.search import SearchConfig, enumerate_valid
from monosig.sigcore import SignatureFunction


@lru_cache(maxsize=None)
def all_valid(n: int, level: str) -> tuple[SignatureFunction, ...]:
    """Every valid signature on n vertices at the given level, enumerated once."""
    out: list[SignatureFunction] = []
    enumerate_valid(SearchConfig(n=n, level=level), out.append)
    return tuple(out)
