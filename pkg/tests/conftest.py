import pytest

_ACCEPTANCE = {}


@pytest.fixture
def criterion():
    """Record a named acceptance verdict; the summary prints one line per criterion."""
    def record(number: int, title: str, ok: bool, detail: str = ""):
        _ACCEPTANCE[number] = (title, ok, detail)
        assert ok, f"criterion {number} ({title}) failed: {detail}"
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, ok, detail = _ACCEPTANCE[number]
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
