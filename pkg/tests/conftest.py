import time
from contextlib import contextmanager

import pytest

_CRITERIA: dict[int, str] = {}


@contextmanager
def _criterion(number: int, title: str, limit: float | None = None):
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        if limit is not None:
            assert elapsed < limit, f"took {elapsed:.2f} s, limit {limit} s"
    except BaseException as exc:
        _CRITERIA[number] = f"criterion {number:>2}: FAIL  {title} ({type(exc).__name__}: {exc})"
        raise
    _CRITERIA[number] = f"criterion {number:>2}: PASS  {title} [{elapsed:.2f} s]"


@pytest.fixture
def criterion():
    return _criterion


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        terminalreporter.write_line(_CRITERIA[number])
