import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record a one-line PASS/FAIL verdict for an acceptance criterion."""
    state = {"name": request.node.name, "detail": ""}
    yield state
    failed = getattr(request.node, "_call_failed", True)
    verdict = "FAIL" if failed else "PASS"
    ACCEPTANCE_LINES.append(f"[{verdict}] {state['name']}: {state['detail']}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call":
        item._call_failed = report.failed


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
