import os

from hypothesis import settings

# keep the search pool small and deterministic in tests
os.environ.setdefault("TORICDUAL_WORKERS", "2")

settings.register_profile("ci", deadline=None, derandomize=True)
settings.load_profile("ci")


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
