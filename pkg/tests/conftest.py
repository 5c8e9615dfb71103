"""Collects acceptance outcomes and prints one line per criterion at the end of the run."""

from collections import defaultdict

_criteria = {}
_outcomes = defaultdict(list)
_notes = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, title = mark.args
            _criteria[item.nodeid] = (number, title)


def pytest_runtest_logreport(report):
    if report.nodeid not in _criteria:
        return
    number, _ = _criteria[report.nodeid]
    if report.when == "call" or report.failed or report.skipped:
        _outcomes[number].append(report.outcome)
    for key, value in report.user_properties:
        if key == "note" and report.when == "call":
            _notes[number].append(value)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    titles = {n: t for n, t in _criteria.values()}
    terminalreporter.section("acceptance criteria")
    for number in sorted(titles):
        outcomes = _outcomes.get(number, [])
        if not outcomes:
            verdict = "NOT RUN"
        elif all(o == "passed" for o in outcomes):
            verdict = "PASS"
        else:
            verdict = "FAIL"
        terminalreporter.write_line(f"criterion {number:>2}: {verdict:<7} {titles[number]}")
        for note in _notes.get(number, []):
            terminalreporter.write_line(f"              note: {note}")
