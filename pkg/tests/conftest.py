import numpy as np
import pytest
from hypothesis import strategies as st

from tomobound import LineSums

WORKED = LineSums((11, 10, 8, 8, 8, 6, 6, 6, 3, 3, 3, 2), (12, 10, 7, 6, 6, 6, 6, 6, 6, 6, 3))


@pytest.fixture
def worked():
    return WORKED


@st.composite
def grids(draw, max_m=6, max_n=6):
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(1, max_n))
    bits = draw(st.lists(st.booleans(), min_size=m * n, max_size=m * n))
    return np.array(bits, dtype=bool).reshape(m, n)


@st.composite
def monotone_consistent(draw, max_m=8, max_n=8):
    """Sorted margins of a random grid: always monotone and consistent."""
    g = draw(grids(max_m, max_n))
    return LineSums(sorted(g.sum(axis=1).tolist(), reverse=True), sorted(g.sum(axis=0).tolist(), reverse=True))


@st.composite
def direct_instances(draw, max_m=8, max_n=8):
    """Monotone consistent sums with r1 = n and c1 = m (a full first row and column)."""
    g = draw(grids(max_m, max_n))
    g[0, :] = True
    g[:, 0] = True
    return LineSums(sorted(g.sum(axis=1).tolist(), reverse=True), sorted(g.sum(axis=0).tolist(), reverse=True))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
