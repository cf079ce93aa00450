from __future__ import annotations

import pytest

from capital.corpus import load

_ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture(scope="session")
def corpus():
    """``(entry, graph)`` pairs sorted by entry name."""
    return load()


@pytest.fixture(scope="session")
def corpus_by_name(corpus):
    return {e.name: g for e, g in corpus}


def pytest_configure(config: pytest.Config) -> None:
    config.stash[_ACCEPTANCE] = {}


@pytest.fixture
def record_criterion(request):
    """Store one pass/fail line per acceptance criterion for the summary."""
    table = request.config.stash[_ACCEPTANCE]

    def record(number: int, passed: bool, detail: str, blocking: bool = True) -> None:
        status = "PASS" if passed else ("FAIL" if blocking else "NOTE")
        table[number] = f"criterion {number:>2}: {status}  {detail}"

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config) -> None:
    table = config.stash.get(_ACCEPTANCE, {})
    if not table:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(table):
        terminalreporter.write_line(table[number])
