"""
Acceptance criteria 1-10, one test each, each printing its verdict line.

Run alone with `pytest tests/test_acceptance.py -v` or `python tests/test_acceptance.py`.
Criterion 4 is expected to fail: the reference matrix it compares against does
not match the configurations (see README).
"""

import sys

import pytest

from lltswap import acceptance

EXPECTED_FAILURES = {
    4: "reference matrix differs from the computed one in 5 entries; the data support t^-1 where it shows t",
}


def _report(capsys, result):
    with capsys.disabled():
        print("\n" + result.line())
        if result.failures:
            print(f"    failures: {result.failures}")


@pytest.mark.parametrize("number", [
    pytest.param(k, marks=pytest.mark.xfail(strict=True, reason=EXPECTED_FAILURES[k]))
    if k in EXPECTED_FAILURES else k
    for k in acceptance.CRITERIA
])
def test_criterion(number, capsys):
    result = acceptance.run([number])[0]
    _report(capsys, result)
    assert result.passed, result.detail


def test_criterion_4_parts_that_hold():
    result = acceptance.criterion_4()
    assert "(4,5) entry zero: True" in result.detail
    assert "lambda8 row: True" in result.detail
    assert sorted((i, j) for i, j, _, _ in result.failures) == [(2, 1), (3, 2), (5, 1), (5, 2), (5, 3)]


def test_reference_inverse_is_consistent():
    assert acceptance.reference_inverse_check()


if __name__ == "__main__":
    results = acceptance.run(acceptance.CRITERIA)
    for r in results:
        print(r.line())
    sys.exit(0 if all(r.passed for r in results) else 1)
