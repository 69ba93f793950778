import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from latgraph import MeetTable, chain, chain_product, validate  # noqa: E402


def from_covers(n, covers, bottom=0, top=None):
    """Lattice from its Hasse diagram, via the oracle's closure and meet scan."""
    top = n - 1 if top is None else top
    meet = oracles.meet_from_leq(oracles.closure(n, covers))
    return validate(meet, bottom, top)


@pytest.fixture
def two():
    return chain(2)


@pytest.fixture
def chain4():
    # 0 < a=1 < b=2 < 1=3
    return chain(4)


@pytest.fixture
def diamond():
    # 0, a=1, b=2, 1=3
    return from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


@pytest.fixture
def pentagon():
    # 0 < a=1 < b=2 < 1=4, 0 < c=3 < 1
    return from_covers(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])


@pytest.fixture
def m3():
    return from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


@pytest.fixture
def b3():
    return chain_product((1, 1, 1))


def as_lists(S: MeetTable):
    return np.asarray(S.meet).tolist()
