import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.write_sep("=", "ACCEPTANCE SUMMARY")
    for line in acceptance.summary_lines():
        terminalreporter.write_line(line)
