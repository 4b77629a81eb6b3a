"""Shared test plumbing: the acceptance summary block."""

ACCEPTANCE: list[tuple[int, str, bool]] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num, label, ok in sorted(ACCEPTANCE):
        mark = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d} {mark}  {label}")
