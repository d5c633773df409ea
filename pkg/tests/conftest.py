import pytest

from salimit.subshift import omega
from salimit.trees import FamilyTree, named_branch
from salimit.words import SymbolicPoint

OMEGA3_TEXT = "3" + "110" + "2" * 8 + "3" + "11" + "2" * 5 + "3" + "1" + "2" * 3 + "34" + "0^inf"


@pytest.fixture
def increasing_pair():
    return FamilyTree("increasing"), named_branch("primes")


@pytest.fixture
def omega3(increasing_pair):
    return omega(3, *increasing_pair)


def pt(text: str) -> SymbolicPoint:
    return SymbolicPoint.parse(text)


ACCEPTANCE: dict = {}


@pytest.fixture
def record():
    def _record(number: int, ok: bool, detail: str) -> bool:
        line = f"acceptance {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE[number] = line
        print(line)
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
