import pytest

_LINES: dict = {}


class CriterionLog:
    """Collects one verdict line per acceptance criterion for the terminal summary."""

    def __init__(self, number: int):
        self.number = number

    def record(self, ok: bool, detail: str) -> None:
        _LINES[self.number] = f"criterion {self.number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.fixture
def criterion(request):
    number = request.node.get_closest_marker("criterion").args[0]
    return CriterionLog(number)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_LINES):
        terminalreporter.write_line(_LINES[number])
