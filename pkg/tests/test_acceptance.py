"""The verification gate: every criterion runs at its exact tolerance.

One test per criterion; each prints a PASS/FAIL line so a verbose run reads
as a report.  All comparisons are exact (booleans, counts, set equalities).
"""

import pytest

from pmkit import acceptance


@pytest.mark.parametrize(
    "number,title,func",
    [(i, t, f) for i, (t, f) in enumerate(acceptance.CRITERIA, start=1)],
    ids=[f"{i:02d}-{t.replace(' ', '-')}" for i, (t, _) in enumerate(acceptance.CRITERIA, start=1)],
)
def test_criterion(number, title, func):
    ok, detail = func()
    print(f"criterion {number:2d} {'PASS' if ok else 'FAIL'} {title} ({detail})")
    assert ok, f"criterion {number} ({title}): {detail}"
