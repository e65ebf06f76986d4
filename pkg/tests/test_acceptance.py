"""Acceptance suite: every tagged criterion, one test each, within budget.

Each test prints one summary line.  A criterion fails only if one of its
labelled checks fails; the failure message then carries the labels and
details of exactly the checks that went wrong.
"""

import pytest

from brsc.reproduce import acceptance_rows, run_criterion

ROWS = list(acceptance_rows())


@pytest.mark.parametrize(
    "idx,row", list(enumerate(ROWS, 1)), ids=[r.tag for r in ROWS]
)
def test_criterion(idx, row):
    rep = run_criterion(row.tag)
    status = "PASS" if rep.ok else "FAIL"
    print(f"criterion {idx:02d} [{row.tag}] {status} ({rep.elapsed:.1f}s <= {row.budget:.0f}s)")
    assert rep.elapsed <= row.budget, f"{row.tag} exceeded its {row.budget:.0f}s budget"
    bad = [c for c in rep.checks if not c.ok]
    assert rep.ok, "\n".join(f"{c.label}: {c.detail}" for c in bad)
