"""Screening all families for m = 3 and m = 5.

A family with no invariant quadrics is totally geodesic; a family with
d_n >= 2 and d_{m-n} >= 2 for some n != m - n is not.  Whatever neither
test settles is reported as undetermined.
"""

from collections import Counter

from cyclic_covers import Status, survey

for m, n_max in [(3, 12), (5, 10)]:
    verdicts = survey(m, n_max)
    print(f"m = {m}, N <= {n_max}:", dict(Counter(v.status.value for v in verdicts)))
    for v in verdicts:
        if v.status in (Status.TOTALLY_GEODESIC, Status.UNDETERMINED):
            caveats = ", ".join(sorted(c.value for c in v.caveats))
            print(f"   {v.status.value:16s} {v.datum}  genus {v.invariants.genus}  {caveats}")

# the bound N <= 2m: beyond it no family is ever totally geodesic
for m in range(3, 8):
    late = [v for v in survey(m, 2 * m + 4)
            if v.status is Status.TOTALLY_GEODESIC and v.datum.N > 2 * m]
    print(f"m = {m}: totally geodesic families with N > 2m: {len(late)}")
