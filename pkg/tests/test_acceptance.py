"""Acceptance gate: one line per criterion, each at its stated runtime budget."""
import pytest

from edslab.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA], ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(number):
    res = run_criterion(number, seed=0)
    print(res.line())
    assert res.passed, res.detail
    assert res.seconds < res.limit, f"took {res.seconds:.2f}s, budget {res.limit}s"
