import pytest

ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion."""
    name = request.node.name

    def record(ok: bool, detail: str = ""):
        ACCEPTANCE.append((name, ok, detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
