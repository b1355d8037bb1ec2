import pytest
from hypothesis import settings

from sptcrank.crank_table import crank_table

settings.register_profile("sptcrank", deadline=None, max_examples=60)
settings.load_profile("sptcrank")


@pytest.fixture(scope="session")
def table_c1_2000():
    return crank_table("C1", 2000)


@pytest.fixture(scope="session")
def table_c5_2000():
    return crank_table("C5", 2000)


@pytest.fixture(scope="session")
def acceptance_log(request):
    log = []
    request.config._acceptance_log = log
    return log


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    log = getattr(config, "_acceptance_log", None)
    if log:
        terminalreporter.section("acceptance criteria")
        for line in log:
            terminalreporter.write_line(line)
