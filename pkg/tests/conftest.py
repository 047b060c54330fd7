import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qcenter import rootdata  # noqa: E402


@pytest.fixture(scope="session")
def A1():
    return rootdata.build("A1")


@pytest.fixture(scope="session")
def A2():
    return rootdata.build("A2")


@pytest.fixture(scope="session")
def B2():
    return rootdata.build("B2")


@pytest.fixture(scope="session")
def G2():
    return rootdata.build("G2")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
