import itertools

import pytest

from lecturehall.seqcore import SSequence


def small_grid(max_dim=3, max_entry=5):
    for n in range(1, max_dim + 1):
        for t in itertools.product(range(1, max_entry + 1), repeat=n):
            yield t


@pytest.fixture(scope="session")
def grid_3x5():
    return [SSequence(t) for t in small_grid(3, 5)]


# one line per acceptance criterion, filled by test_acceptance
ACCEPTANCE_LINES: dict = {}


def record_acceptance(key, ok, detail=""):
    ACCEPTANCE_LINES[key] = f"{'PASS' if ok else 'FAIL'}  {key}  {detail}".rstrip()
    print(ACCEPTANCE_LINES[key])


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES, key=_criterion_order):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])


def _criterion_order(key):
    num = key.split(" ", 1)[0]
    # stable sort keeps the per-row lines in run order
    return int(num)
