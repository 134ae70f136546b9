import pytest
from hypothesis import settings

# exact arithmetic on a loaded box can blow hypothesis' default deadline
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

_ACCEPTANCE = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and item.fspath.basename == "test_acceptance.py":
        _ACCEPTANCE[item.name] = report.passed


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        status = "PASS" if _ACCEPTANCE[name] else "FAIL"
        terminalreporter.write_line(f"{status} {name}")
