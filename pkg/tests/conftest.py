import pytest

from bernshift import BernoulliCache, bs_direct


@pytest.fixture(scope="session")
def cache():
    """One sealed cache large enough for every range the suite sweeps."""
    return BernoulliCache(202)


@pytest.fixture(scope="session")
def grid80(cache):
    """B[r,s] for 0 <= r,s <= 80, all computed by the defining sum."""
    return {(r, s): bs_direct(cache, r, s) for r in range(81) for s in range(81)}
