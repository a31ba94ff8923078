"""Shared pytest configuration.

Registers the ``criterion`` marker used by the acceptance suite and prints a
one-line PASS/FAIL verdict per acceptance criterion at the end of the run.
"""

_CRITERION_BY_NODE = {}
_CRITERION_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "criterion(number, label): marks a test as one of the numbered "
        "acceptance-gate criteria; the terminal summary reports each number "
        "with a PASS/FAIL line",
    )


def pytest_collection_modifyitems(config, items):
    for item in items:
        marker = item.get_closest_marker("criterion")
        if marker is not None:
            _CRITERION_BY_NODE[item.nodeid] = (marker.args[0], marker.args[1])


def pytest_runtest_logreport(report):
    info = _CRITERION_BY_NODE.get(report.nodeid)
    if info is None:
        return
    number, label = info
    record = _CRITERION_RESULTS.setdefault(number, {"label": label, "ok": True})
    if report.failed:
        record["ok"] = False
    if report.when == "call" and report.skipped:
        # A skipped criterion is not a pass; nothing may be deferred.
        record["ok"] = False


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERION_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERION_RESULTS):
        record = _CRITERION_RESULTS[number]
        verdict = "PASS" if record["ok"] else "FAIL"
        terminalreporter.write_line(
            "criterion %2d: %s - %s" % (number, verdict, record["label"])
        )
