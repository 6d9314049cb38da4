"""The eleven acceptance criteria, each with its tolerance and runtime budget.

One PASS/FAIL line per criterion is printed here and repeated in the pytest
terminal summary.
"""

import pytest

import conftest
from schubert import acceptance


@pytest.fixture(scope="module", autouse=True)
def fresh_caches():
    acceptance.clear_caches()
    yield


@pytest.mark.parametrize("number", [c[0] for c in acceptance.CRITERIA],
                         ids=[f"c{c[0]}-{c[1].split(' ')[0].lower()}" for c in acceptance.CRITERIA])
def test_criterion(number):
    result = acceptance.run_criterion(number)
    line = result.line()
    print(line)
    conftest.ACCEPTANCE_LINES.append(line)
    assert result.passed, line


def test_selftest_detects_broken_h_recurrence():
    with acceptance.mutated("h-recurrence"):
        failed = [n for n in (4, 8, 9) if not acceptance.run_criterion(n).passed]
    assert failed, "a corrupted recurrence went unnoticed"
    # and the real kernel is back afterwards
    assert acceptance.run_criterion(8).passed
