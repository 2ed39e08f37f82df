import pytest

from milnoralg import random_ci_tuple, random_smooth

# The sizes every pool-based check runs over.
PAIRS = [(1, 4), (2, 3), (2, 4), (2, 5), (3, 3)]


@pytest.fixture(scope="session")
def smooth_pools():
    """20 seeded random smooth forms per (n, d)."""
    return {
        (n, d): [random_smooth(n, d, seed=9_000 + 37 * i + 1_000 * n + 10 * d) for i in range(20)]
        for n, d in PAIRS
    }


@pytest.fixture(scope="session")
def nonst_pools():
    """20 seeded random smooth non-direct-sum forms per (n, d)."""
    return {
        (n, d): [
            random_smooth(n, d, seed=70_000 + 13 * i + 1_000 * n + 10 * d, require_non_st=True)
            for i in range(20)
        ]
        for n, d in PAIRS
    }


@pytest.fixture(scope="session")
def ci_pools():
    """10 seeded random complete-intersection tuples per (n, d)."""
    return {
        (n, d): [random_ci_tuple(n, d, seed=30_000 + 11 * i + 1_000 * n + 10 * d) for i in range(10)]
        for n, d in PAIRS
    }
