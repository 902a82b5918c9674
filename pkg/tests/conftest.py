import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from quivermut.quiver import Quiver  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"


def random_matrix(rng: random.Random, n: int, bound: int, density: float = 1.0):
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                v = rng.randint(-bound, bound)
                b[i][j], b[j][i] = v, -v
    return b


def random_acyclic(rng: random.Random, n: int, bound: int):
    """Arrows only from lower to higher index, then a random relabelling."""
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.randint(0, bound)
            b[i][j], b[j][i] = v, -v
    perm = list(range(n))
    rng.shuffle(perm)
    return Quiver([[b[perm[i]][perm[j]] for j in range(n)] for i in range(n)])


@st.composite
def quivers(draw, min_n=1, max_n=5, bound=4):
    n = draw(st.integers(min_n, max_n))
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = draw(st.integers(-bound, bound))
            b[i][j], b[j][i] = v, -v
    return Quiver(b)


@pytest.fixture
def rng():
    return random.Random(20240615)


@pytest.fixture
def fixture_paths():
    return sorted(FIXTURES.glob("*.q"))


ACCEPTANCE = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None and rep.when == "call":
        ACCEPTANCE.append((marker.args[0], marker.args[1], rep.passed, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, duration in sorted(ACCEPTANCE):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{status} criterion {number}: {title} ({duration:.2f}s)")
