import pytest

from wdg.diagrams import PartitionInput, diagram_from_divisors, diagram_from_input


@pytest.fixture
def diagram():
    def make(lie_type, rank, mu=(), nu=(), variant=None):
        return diagram_from_input(PartitionInput(lie_type, rank, tuple(mu), tuple(nu), variant))

    return make


@pytest.fixture
def from_divisors():
    return diagram_from_divisors


ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
