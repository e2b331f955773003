import pytest

_criteria: list[tuple[int, str, str, float]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call":
        return
    number, title = marker.args
    status = "PASS" if rep.passed else "FAIL"
    line = (number, title, status, rep.duration)
    _criteria.append(line)
    print(f"\ncriterion {number:>2}: {status}  {title}  ({rep.duration:.2f} s)")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status, duration in sorted(_criteria):
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {title}  ({duration:.2f} s)")
