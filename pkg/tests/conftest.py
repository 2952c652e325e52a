import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from hypothesis import settings  # noqa: E402

settings.register_profile("default", deadline=None)
settings.load_profile("default")

_criteria: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, text): acceptance criterion reported in the summary")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    label, text = crit
    ok = report.outcome == "passed"
    prev = _criteria.get(label)
    if prev is None or prev[0] == "PASS":
        _criteria[label] = ("PASS" if ok else "FAIL", text)


def pytest_runtest_setup(item):
    m = item.get_closest_marker("criterion")
    if m is not None:
        item.user_properties.append(("criterion", (m.args[0], m.args[1])))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")

    def key(label):
        num = "".join(ch for ch in label if ch.isdigit())
        return (int(num or 0), label)

    for label in sorted(_criteria, key=key):
        status, text = _criteria[label]
        terminalreporter.write_line(f"{status} criterion {label}: {text}")
