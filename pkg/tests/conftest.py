import pytest

_acceptance = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    _acceptance[report.nodeid] = report


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, rep in sorted(_acceptance.items(), key=lambda kv: _order(kv[0])):
        status = "PASS" if rep.passed else "FAIL"
        name = nodeid.split("::")[-1]
        line = f"{status}  {name}  ({rep.duration:.2f}s)"
        if rep.failed:
            msg = str(rep.longrepr.reprcrash.message) if hasattr(rep.longrepr, "reprcrash") else ""
            line += "  " + msg.splitlines()[0][:160] if msg else ""
        terminalreporter.write_line(line)


def _order(nodeid):
    name = nodeid.split("::")[-1]
    digits = "".join(ch for ch in name.split("_")[1] if ch.isdigit()) if name.startswith("test_c") else ""
    return int(digits) if digits else 99


@pytest.fixture
def C():
    from tangency.composition import Composition

    return lambda *entries: Composition(entries)
