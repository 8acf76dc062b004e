"""Acceptance suite: one test per release criterion, exact tolerances.

Each test prints its pass/fail line (visible with `pytest -s` or in the
captured output of a failure); `radcube selftest` runs the same checks
from the command line.
"""

import time

import pytest

from radcube.catalog import verify_catalog
from radcube.selftest import (
    criterion_1_flagship,
    criterion_2_gorenstein,
    criterion_3_socle_guard,
    criterion_4_recursion_grid,
    criterion_5_property_suite,
    criterion_6_bass_lemma,
)

BUDGETS = {
    "1 non-Gorenstein flagship (R4)": (criterion_1_flagship, 5.0),
    "2 Gorenstein suite (R1)": (criterion_2_gorenstein, 5.0),
    "3 socle guard (RS)": (criterion_3_socle_guard, 2.0),
    "4 recursion grid": (criterion_4_recursion_grid, 10.0),
    "5 randomized property suite": (criterion_5_property_suite, 60.0),
    "6 Bass-series lemma (R4)": (criterion_6_bass_lemma, 5.0),
}


def run_criterion(name):
    fn, budget = BUDGETS[name]
    t0 = time.time()
    ok, detail = fn()
    dt = time.time() - t0
    status = "pass" if ok and dt <= budget else "FAIL"
    print(f"[{status}] criterion {name}: {detail} ({dt:.1f}s, budget {budget:.0f}s)")
    assert ok, detail
    assert dt <= budget, f"runtime {dt:.1f}s exceeded {budget:.0f}s budget"


def test_catalog_self_check():
    problems = verify_catalog()
    print(
        "[pass] catalog self-check: all entries match recorded invariants"
        if not problems
        else f"[FAIL] catalog self-check: {problems}"
    )
    assert problems == []


@pytest.mark.parametrize("name", list(BUDGETS), ids=lambda n: n.replace(" ", "_"))
def test_acceptance_criterion(name):
    run_criterion(name)
