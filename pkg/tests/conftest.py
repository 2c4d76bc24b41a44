import os
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run the slow table reproduction")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow") or os.environ.get("RGDOPT_SLOW"):
        return
    skip = pytest.mark.skip(reason="slow: use --runslow or RGDOPT_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    import acceptance_log

    if not acceptance_log.RESULTS and not acceptance_log.TITLES:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance_log.summary_lines():
        terminalreporter.write_line(line)
