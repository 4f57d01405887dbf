import pytest

from qflag.permutation import parse_perm
from qflag.qhring import ProductTable, full_table

_tables = {}


def table_for(n: int) -> ProductTable:
    if n not in _tables:
        _tables[n] = full_table(n, limit=5)
    return _tables[n]


@pytest.fixture(scope="session")
def tables():
    return table_for


@pytest.fixture
def P():
    return parse_perm


# one PASS/FAIL line per acceptance criterion in the terminal summary;
# a parametrized criterion passes only if every case passes

_criteria: dict = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not report.failed:
        return
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1].split("[")[0]
    number = int(name.rsplit("_", 1)[1])
    cases = _criteria.setdefault(number, [])
    cases.append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        cases = _criteria[number]
        status = "PASS" if all(cases) else "FAIL"
        terminalreporter.write_line(
            f"{status}  criterion {number}  ({sum(cases)}/{len(cases)} cases)")
