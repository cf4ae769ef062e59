import pytest
from hypothesis import settings

from farmarb import search

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def reach20():
    return search.reach(20)


@pytest.fixture(scope="session")
def reach35():
    return search.reach(35)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
