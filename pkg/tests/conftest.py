"""Prints one PASS/FAIL line per acceptance gate at the end of a run."""

import re


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance" not in nodeid:
                continue
            name = nodeid.rsplit("::", 1)[-1]
            bad = status != "passed"
            outcomes[name] = outcomes.get(name, False) or bad
    if not outcomes:
        return
    writer = terminalreporter
    writer.section("acceptance gates")
    for name in sorted(outcomes):
        label = re.sub(r"^test_acceptance_", "", name).replace("_", " ")
        verdict = "FAIL" if outcomes[name] else "PASS"
        writer.write_line(f"acceptance {label}: {verdict}")
