import contextlib

import pytest

_results = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_results] = []


@pytest.fixture
def criterion(request):
    """Context manager recording one acceptance criterion as PASS or FAIL."""
    results = request.config.stash[_results]

    @contextlib.contextmanager
    def record(number, title):
        try:
            yield
        except BaseException:
            results.append((number, title, False))
            raise
        results.append((number, title, True))

    return record


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(_results, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok in sorted(results):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}")
