import random

import pytest

from tmft.ring import make_ring
from tmft.transform import Signal

RING_SPECS = ["bitvec:8", "poly:4:13", "gf:8:11b"]
SMALL_RING_SPECS = ["bitvec:1", "bitvec:2", "poly:2:7", "poly:2:5", "gf:2:7"]
SCHEMES = ["tree", "flat"]


@pytest.fixture(params=RING_SPECS)
def ring(request):
    return make_ring(request.param)


@pytest.fixture(params=SCHEMES)
def scheme(request):
    return request.param


@pytest.fixture
def rng():
    return random.Random(20150420)


def random_signal(n, ring, rng):
    return Signal(n, ring, [ring.random_element(rng) for _ in range(1 << n)])


# One line per acceptance criterion, filled in by tests/test_acceptance.py.
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[num])
