import pytest

_ACCEPTANCE = pytest.StashKey[list]()


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False,
                     help="also run long checks (F4 three-way verification, F4 cube count)")


def pytest_configure(config):
    config.stash[_ACCEPTANCE] = []


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def acceptance(request):
    """Record one pass/fail line for an acceptance criterion.

    Lines are printed immediately and repeated in the terminal summary.
    """
    lines = request.config.stash[_ACCEPTANCE]

    def record(criterion, passed, detail):
        line = f"criterion {criterion}: {'PASS' if passed else 'FAIL'}  {detail}"
        lines.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
