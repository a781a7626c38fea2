"""Shared pytest plumbing: acceptance criteria print one pass/fail line
each in the terminal summary."""

ACCEPTANCE_RESULTS: list[tuple[int, str, bool, str]] = []


def record_criterion(num: int, description: str, failures: list) -> None:
    """Record one acceptance criterion outcome, then assert it."""
    ok = not failures
    detail = "; ".join(str(f) for f in failures)
    ACCEPTANCE_RESULTS.append((num, description, ok, detail))
    assert ok, f"criterion {num} [{description}]: {detail}"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, desc, ok, detail in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if ok else "FAIL"
        line = f"criterion {num:02d} [{desc}]: {status}"
        if not ok:
            line += f" :: {detail}"
        terminalreporter.write_line(line)
