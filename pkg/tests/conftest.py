import pytest


def pytest_configure(config):
    config._criterion_results = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        number, title = marker.args
        item.config._criterion_results[item.nodeid] = (number, title, rep.passed)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = sorted(config._criterion_results.values())
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed in results:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {number:>2}. {title}")
