import pytest

from support import running_pair, setup


@pytest.fixture(scope="session")
def running():
    return setup('running')


@pytest.fixture(scope="session")
def gentle():
    return setup('gentle')


@pytest.fixture(scope="session")
def twofixed():
    return setup('twofixed')


@pytest.fixture(scope="session")
def d4():
    return setup('d4')


@pytest.fixture(scope="session")
def sigma_tau():
    return running_pair()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
