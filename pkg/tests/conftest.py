import re


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One visible PASS/FAIL line per acceptance criterion."""
    pattern = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")
    results = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            m = pattern.search(report.nodeid)
            if m:
                label = report.nodeid.split("::")[-1]
                results[int(m.group(1))] = (status, label)
    if not results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(results):
        status, label = results[num]
        verdict = "PASS" if status == "passed" else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {num} {verdict}  {label}")
