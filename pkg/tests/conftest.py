from pathlib import Path

import pytest

from chordkit import ChordDiagram

FIXTURES = Path(__file__).parent / "fixtures"


def naive_matchings(points):
    """All perfect matchings of a sorted point list, no pruning."""
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for idx, partner in enumerate(rest):
        for m in naive_matchings(rest[:idx] + rest[idx + 1:]):
            yield [(first, partner)] + m


def naive_class(n, k):
    """Set of size-n diagrams with all chords >= k, by filtering every matching."""
    return {
        ChordDiagram.from_pairs(m)
        for m in naive_matchings(list(range(1, 2 * n + 1)))
        if all(e - s >= k for s, e in m)
    }


def load_table1():
    lines = (FIXTURES / "table1.csv").read_text().splitlines()
    out = {}
    for line in lines[1:]:
        k, *vals = line.split(",")
        for n, v in enumerate(vals, 1):
            out[(n, int(k))] = int(v)
    return out


def load_oeis(name):
    out = {}
    for line in (FIXTURES / "oeis" / f"{name}.txt").read_text().splitlines():
        if line.startswith("#") or not line.strip():
            continue
        n, v = line.split()
        out[int(n)] = int(v)
    return out


@pytest.fixture(scope="session")
def table1():
    return load_table1()


# one summary line per acceptance criterion
_CRITERIA = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        label = marker.args[0]
        if hasattr(item, "callspec"):
            label += f" [{item.callspec.id}]"
        _CRITERIA.append((label, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in _CRITERIA:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {label}")
