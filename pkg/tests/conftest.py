"""Shared test plumbing: one printed pass/fail line per acceptance
criterion, emitted in the terminal summary."""

_criterion_lines = {}


def record_criterion(num, ok, detail):
    status = "PASS" if ok else "FAIL"
    _criterion_lines[num] = f"criterion {num:>2}: {status} - {detail}"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _criterion_lines:
        terminalreporter.section("acceptance criteria")
        for num in sorted(_criterion_lines):
            terminalreporter.write_line(_criterion_lines[num])
