import re

_CRITERIA = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    entry = _CRITERIA.setdefault(key, {"outcome": "passed", "duration": 0.0, "summary": ""})
    entry["duration"] += report.duration
    if report.failed:
        entry["outcome"] = "failed"
    elif report.skipped and entry["outcome"] == "passed":
        entry["outcome"] = "skipped"
    for name, value in report.user_properties:
        if name == "summary":
            entry["summary"] = value


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for (num, name), entry in sorted(_CRITERIA.items()):
        verdict = {"passed": "PASS", "failed": "FAIL"}.get(entry["outcome"], "SKIP")
        detail = f" ({entry['summary']})" if entry["summary"] else ""
        terminalreporter.write_line(f"criterion {num:2d} {name.replace('_', '-')}: {verdict} [{entry['duration']:.1f}s]{detail}")
