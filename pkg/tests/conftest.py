"""Prints one PASS/FAIL line per acceptance criterion after the run."""


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for report in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(report, "user_properties", ()))
            if "criterion" in props and report.when == "call":
                lines.append((props["criterion"], outcome, props.get("summary", "")))
    if lines:
        terminalreporter.section("acceptance criteria")
        for n, outcome, summary in sorted(lines):
            terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'} "
                                        f"criterion {n}: {summary}")
