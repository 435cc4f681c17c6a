import pytest

_criterion_lines = []


@pytest.fixture(scope="session")
def criterion():
    """Collect one verdict line per acceptance criterion for the final
    terminal summary."""
    def record(line):
        _criterion_lines.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _criterion_lines:
        terminalreporter.section("acceptance criteria")
        for line in _criterion_lines:
            terminalreporter.line(line)
