"""Shared fixtures, plus the acceptance reporting hook.

Acceptance tests register one line per criterion; the terminal summary
prints them all at the end of the run so a quick scan of the output shows
PASS or FAIL for every criterion, even when a test body blows up early.
"""

import contextlib

import pytest


def pytest_configure(config):
    config._acceptance_lines = {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", {})
    if lines:
        terminalreporter.section("acceptance criteria")
        for number in sorted(lines):
            terminalreporter.write_line(lines[number])


def _record(config, number, ok, detail):
    verdict = "PASS" if ok else "FAIL"
    config._acceptance_lines[number] = f"ACCEPTANCE {number}: {verdict} - {detail}"


@pytest.fixture
def acceptance(request):
    """Context manager recording one acceptance criterion outcome.

    The test body fills state["ok"] and state["detail"]; an exception
    inside the block still records a FAIL line before propagating.
    """

    @contextlib.contextmanager
    def criterion(number: int, title: str):
        state = {"ok": False, "detail": title}
        try:
            yield state
        except BaseException as exc:
            _record(request.config, number, False, f"{title} ({type(exc).__name__}: {exc})")
            raise
        _record(request.config, number, state["ok"], state["detail"])
        assert state["ok"], f"criterion {number}: {state['detail']}"

    return criterion
