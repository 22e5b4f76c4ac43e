#!/usr/bin/env python3
"""Run the whole claim catalogue and print one verdict per instance.

Exit status follows the CLI convention: 0 all match, 1 some hypothesis
was not met (and nothing mismatched), 2 at least one mismatch.
"""

import sys
import time

from dscodes import sets, theorems
from dscodes.code import DefiningSet
from dscodes.field import get_field


def main() -> int:
    t0 = time.perf_counter()
    reports = []

    for p, m in [(3, 2), (3, 3), (5, 2), (7, 2)]:
        reports.append(theorems.verify_simplex(p, m))
    reports += theorems.scan(theorems.ClaimId.COR2_ONEWEIGHT_L, p=3, m_values=(2, 3))
    reports += theorems.scan(theorems.ClaimId.COR2_ONEWEIGHT_L, p=5, m_values=(2,))

    prop = theorems.thm1_property_test(3, 2)
    for m in (5, 7):
        f = get_field(2, m)
        d1 = sets.tr_cubic_set(m, f)
        d2_els = tuple(set(range(1, f.q)) - set(d1.elements))
        reports.append(theorems.verify_split(d1, DefiningSet(f, d2_els, label="rest")))

    reports += theorems.scan(theorems.ClaimId.COR3_COMPLEMENT, p=2, m_values=(4, 5), trials=25)
    reports += theorems.scan(theorems.ClaimId.COR4_QF_ODD, p=3, m_values=(3,))
    reports += theorems.scan(theorems.ClaimId.COR4_QF_EVEN, p=3, m_values=(2, 4))
    reports += theorems.scan(theorems.ClaimId.COR5_BOOLEAN, m_values=(4, 5, 6, 7))
    reports += theorems.scan(theorems.ClaimId.THM3_HKM, h_values=(1, 3))
    reports += theorems.scan(theorems.ClaimId.THM4_ODD_M, m_values=(5, 7, 9, 11, 13))
    reports += theorems.scan(theorems.ClaimId.THM5_EVEN_M, m_values=(4, 6, 8, 10, 12))

    width = max(len(str(r.params)) for r in reports)
    for r in reports:
        print(f"{r.claim.value:<9} {str(r.params):<{width}} {r.verdict}")
    print(
        f"thm1prop  p=3 m=2 trials={prop.trials} "
        f"{'match' if prop.all_matched else 'mismatch'}"
    )

    summary = theorems.scan_summary(reports)
    print(
        f"\n{summary['total'] + 1} instances in {time.perf_counter() - t0:.1f} s: "
        f"{summary['match'] + int(prop.all_matched)} match, "
        f"{summary['mismatch']} mismatch, "
        f"{summary['hypothesis-not-met']} hypothesis-not-met"
    )
    if summary["mismatch"] or not prop.all_matched:
        return 2
    if summary["hypothesis-not-met"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
