import pytest

_RESULTS: dict = {}


@pytest.fixture
def acceptance():
    """Record the outcome of a numbered acceptance criterion for the summary."""

    def record(number: int, title: str, ok: bool, detail: str = ""):
        _RESULTS[number] = (title, ok, detail)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, ok, detail = _RESULTS[number]
        line = f"[{'PASS' if ok else 'FAIL'}] {number}. {title}"
        if detail:
            line += f" :: {detail}"
        terminalreporter.write_line(line)
