"""Sweep the T1 and T2 families and compare the small-field criterion with
direct weight-3 search, as the library does for every instance."""

from collections import Counter

from pcyclic import family_T1, family_T2, make_field, weight3_search

tally = Counter()
for p, ms in ((5, (2, 3, 4, 5)), (7, (2, 3))):
    for m in ms:
        ctx = make_field(p, m)
        for fam in (family_T1, family_T2):
            for h in range(m):
                for k in range(1 if fam is family_T2 else 0, m):
                    for inst in fam(p, m, h, k):
                        if not inst.hypotheses_pass:
                            tally["hypothesis failed"] += 1
                            continue
                        search_d3 = any(weight3_search(ctx, w) is not None for w in inst.distinct_w())
                        agree = search_d3 == inst.criterion.has_solution
                        tally[("agree" if agree else "DISAGREE", "d=3" if search_d3 else "d=4")] += 1

for key, count in sorted(tally.items(), key=str):
    print(f"{str(key):32s} {count}")
