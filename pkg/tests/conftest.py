import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from maxchains.poset import Poset
from maxchains.profile import profile_matrix
from maxchains.search import posets_of_size


def pendant_example():
    """Trivial construction for {2,3,3,5,5}: x1..x5 = 0..4, s21=5, s31=6, s32=7, s51=8."""
    return Poset(9, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (1, 6), (1, 7), (3, 8)])


def unsplit_example():
    """Poset without splitting elements: chain c1..c9 = 0..8, L=9, R1=10, R2=11, R3=12."""
    edges = [(i, i + 1) for i in range(8)]
    edges += [(9, 3), (1, 10), (10, 4), (10, 11), (11, 12), (11, 7)]
    return Poset(13, edges)


def diamond():
    return Poset(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


def double_diamond():
    """b < m1, m2 < c < u1, u2 < t with b=0, m1=1, m2=2, c=3, u1=4, u2=5, t=6."""
    return Poset(7, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 6)])


def random_poset(rng, n, density=None):
    """Random poset: random strict order compatible with a random labeling, then reduced."""
    if density is None:
        density = rng.random()
    above = [0] * n
    for i in range(n - 1, -1, -1):
        for j in range(i + 1, n):
            if rng.random() < density:
                above[i] |= (1 << j) | above[j]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if (above[i] >> j) & 1 and not any(
                (above[i] >> k) & 1 and (above[k] >> j) & 1 for k in range(i + 1, j)
            ):
                edges.append((i, j))
    perm = list(range(n))
    rng.shuffle(perm)
    return Poset(n, [(perm[i], perm[j]) for i, j in edges])


def random_posets(count, max_n, seed):
    rng = random.Random(seed)
    return [random_poset(rng, rng.randint(1, max_n)) for _ in range(count)]


@pytest.fixture(scope="session")
def corpus7():
    """Every isomorphism class on 1..7 elements with its profile."""
    return [(p, profile_matrix(p)) for n in range(1, 8) for p in posets_of_size(n)]


# -- acceptance reporting ----------------------------------------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    number, title = marker.args
    ok = report.passed if report.when == "call" else False
    _criteria[number] = (title, ok and _criteria.get(number, (title, True))[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title}")
