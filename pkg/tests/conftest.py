import sys

from hypothesis import settings

settings.register_profile("repo", deadline=None, max_examples=60, derandomize=True)
settings.load_profile("repo")


def pytest_terminal_summary(terminalreporter) -> None:
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
