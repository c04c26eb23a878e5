"""The ten acceptance criteria, each run at its stated tolerance.

Every test prints one PASS/FAIL line (outside pytest's capture) naming the
criterion, the statuses of its checks and the elapsed time against the limit.
Documented printed-value mismatches are reported as ``discrepancy`` and do not
fail a criterion.
"""

import time
from collections import Counter

import pytest

from f2modforms import checks

CFG = checks.Config()

# criterion number, group, time limit in seconds, checks expected to be discrepancies
CRITERIA = [
    (1, "census", 5, set()),
    (2, "configurations", 120, {"psi-identities-printed"}),
    (3, "tables", 60, set()),
    (4, "ideal", 600, {"ideal-relation-count"}),
    (5, "weil", 900, {"weil-special-combination-printed"}),
    (6, "psi-lift", 120, set()),
    (7, "qseries", 10, set()),
    (8, "counting", 60, {"stabilizer-order", "stabilizer-image-order",
                         "stabilizer-index-printed-image", "split-plane-pairs"}),
    (9, "lattice", 600, {"avoid-witness-5", "meet-witness-b", "complement-orbit-representatives",
                         "e8-literal-reading"}),
    (10, "cusps", 1, set()),
]


@pytest.mark.parametrize("number,group,limit,discrepancies", CRITERIA, ids=[c[1] for c in CRITERIA])
def test_criterion(number, group, limit, discrepancies, capsys):
    start = time.perf_counter()
    reports = checks.verify_all(CFG, only=[group])
    elapsed = time.perf_counter() - start

    statuses = Counter(r.status for r in reports)
    bad = [r.check_id for r in reports if r.status in ("fail", "resource")]
    found = {r.check_id for r in reports if r.status == "discrepancy"}
    ok = reports and not bad and found == discrepancies and elapsed < limit
    summary = ", ".join(f"{n} {s}" for s, n in sorted(statuses.items()))
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} criterion {number:2d} {group:15s} {summary:40s}"
              f" {elapsed:6.1f}s (limit {limit}s)" + (f" failing: {bad}" if bad else ""))

    assert reports
    assert not bad
    assert found == discrepancies
    assert elapsed < limit
