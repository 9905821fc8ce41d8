import pytest

_results: dict[int, list[tuple[str, str]]] = {}

TITLES = {
    1: "pgd fixtures V_L0..V_L4",
    2: "genus fixtures Gamma_RL0..RL4, three methods",
    3: "oracle equivalence",
    4: "production and bar replay",
    5: "cross-method equality n <= 200",
    6: "count conservation n <= 200",
    7: "log-concavity scan n <= 1000",
    8: "proof-apparatus identities",
    9: "property suites",
}


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False,
                     help="raise oracle bounds (L_6, RL_7)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def slow(request) -> bool:
    return request.config.getoption("--slow")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = getattr(report, "_acceptance", None)
    if marker is None:
        return
    outcome = "skipped" if report.skipped else ("passed" if report.passed else "failed")
    _results.setdefault(marker, []).append((report.nodeid.split("::")[-1], outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("acceptance")
    if m is not None:
        rep._acceptance = m.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_results):
        outcomes = _results[num]
        failed = [name for name, o in outcomes if o == "failed"]
        ran = [o for _, o in outcomes if o != "skipped"]
        status = "FAIL" if failed else ("PASS" if ran else "SKIP")
        tr.write_line(f"criterion {num}: {status}  {TITLES.get(num, '')}"
                      + (f"  (failing: {', '.join(failed)})" if failed else ""))
