import pytest

from hallhodge import build_root_datum


@pytest.fixture
def gl2():
    return build_root_datum("GL", 2)


@pytest.fixture
def gl3():
    return build_root_datum("GL", 3)


ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)
