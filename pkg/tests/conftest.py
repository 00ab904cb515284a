import random

import pytest

from pathfactors.corpus import exhaustive, gnp


def random_graphs(n_range, count, seed, p_choices=(0.2, 0.35, 0.5, 0.65, 0.8)):
    """Deterministic mixed-density sample: one gnp draw per graph."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.choice(list(n_range))
        p = rng.choice(p_choices)
        out.extend(gnp(n, p, seed * 100_003 + i, 1))
    return out


@pytest.fixture(scope="session")
def small_exhaustive():
    """Every labelled graph on 0..5 vertices."""
    return [g for n in range(6) for g in exhaustive(n)]


@pytest.fixture(scope="session")
def six_vertex_graphs():
    return list(exhaustive(6))


_criteria: dict[int, tuple[str, list[bool]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion this test decides")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or (rep.when != "call" and not rep.failed):
        return
    number, title = marker.args
    _criteria.setdefault(number, (title, []))[1].append(rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_criteria):
        title, outcomes = _criteria[number]
        verdict = "PASS" if outcomes and all(outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {verdict}  {title}")
