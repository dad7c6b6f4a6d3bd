import pytest

from arithdeg import validate_field
from arithdeg.arithmetic import primes_up_to

_criteria: dict[int, tuple[bool, str]] = {}


def record_criterion(number: int, passed: bool, detail: str) -> None:
    _criteria[number] = (passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        passed, detail = _criteria[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {detail}")


@pytest.fixture(scope="session")
def small_primes():
    return primes_up_to(100)


@pytest.fixture
def k19():
    return validate_field(-19)


def fundamental_discriminants(bound: int) -> list[int]:
    out = []
    for d in range(-1, -bound - 1, -1):
        try:
            validate_field(d)
        except ValueError:
            continue
        out.append(d)
    return out
