import pytest

from pqtrig import PQParams

# the five-by-five parameter grid used throughout the checks
PQ_VALUES = (1.25, 1.5, 2.0, 3.0, 5.0)


@pytest.fixture(scope="session")
def classic():
    """The classical case p = q = 2."""
    return PQParams(2.0, 2.0)


def pq_grid():
    return [PQParams(p, q) for p in PQ_VALUES for q in PQ_VALUES]


def frac_grid(n, lo=0.01, hi=0.99):
    step = (hi - lo) / (n - 1)
    return [lo + step * i for i in range(n)]
