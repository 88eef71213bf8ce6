import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from permexp.catalog import bundled_corpus  # noqa: E402


@pytest.fixture(scope="session")
def corpus_entries():
    return bundled_corpus()


@pytest.fixture(scope="session")
def corpus_groups(corpus_entries):
    """name -> PermGroup, shared so cached chains and invariants are reused."""
    return {e.name: e.group() for e in corpus_entries}


ACCEPTANCE_LINES = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion, then assert it."""

    def record(number: int, ok: bool, detail: str) -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
        print(line)
        request.config.stash.setdefault(ACCEPTANCE_LINES, []).append(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
