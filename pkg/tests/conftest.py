import time
from contextlib import contextmanager

import pytest

# criterion number -> (passed, seconds, title)
ACCEPTANCE: dict = {}


@contextmanager
def criterion(number, title, limit_s):
    """Record one acceptance criterion; fails if the body fails or runs too long."""
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        took = time.perf_counter() - start
        within = took < limit_s
        ACCEPTANCE[number] = (ok and within, took, limit_s, title)
        line = f"{'PASS' if ok and within else 'FAIL'} criterion {number}: {title} ({took:.1f}s, limit {limit_s:.0f}s)"
        print("\n" + line)
    assert within, f"criterion {number} took {took:.1f}s, limit {limit_s}s"


@pytest.fixture
def acceptance():
    return criterion


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, took, limit, title = ACCEPTANCE[n]
        terminalreporter.write_line(
            f"{'PASS' if ok else 'FAIL'} criterion {n:2d}: {title} ({took:.1f}s, limit {limit:.0f}s)")
