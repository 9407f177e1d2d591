import os
from functools import lru_cache

import pytest

from rotatlas import compute_atlas


@pytest.fixture(scope="session")
def atlas():
    """Memoized atlas computation shared across test modules."""

    @lru_cache(maxsize=None)
    def _atlas(a0: int, a1: int):
        return compute_atlas(a0, a1)

    return _atlas


@pytest.fixture(scope="session")
def paper_listings():
    """Golden endpoint listings for max(|a0|,|a1|) <= 2, keyed by pair."""
    path = os.path.join(os.path.dirname(__file__), "goldens", "endpoints_m2.txt")
    out = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            head, listing = line.split(":", 1)
            a0, a1 = map(int, head.split())
            out[(a0, a1)] = listing.strip()
    return out
