import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from table1_data import EXAMPLE2_EDGES  # noqa: E402

from olfm.society import build_society  # noqa: E402

FIG1_EDGES = [(2, 1), (3, 1), (4, 1)]


@pytest.fixture(scope="session")
def example2():
    """Seven-actor society with one mediation layer (two leaders, one
    independent, two mediators, two followers)."""
    return build_society(7, EXAMPLE2_EDGES)


@pytest.fixture(scope="session")
def fig1():
    """Five-actor two-layer society: three leaders influencing one
    follower, plus one independent."""
    return build_society(5, FIG1_EDGES)


@pytest.fixture(scope="session")
def two_leader3():
    return build_society(3, [(2, 1), (3, 1)])


@pytest.fixture(scope="session")
def star3():
    return build_society(3, [(1, 2), (1, 3)])
