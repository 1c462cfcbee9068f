"""A member of the fourth family (v = (q-1)/2 + (q-3)/2, m even) that the
theory predicts optimal but which carries a weight-3 codeword.

For p = 7, m = 2: v = 47, w = 23.  Both direct search and the exhaustive
oracle find a weight-3 word, so d = 3.  The same happens for p = 11, m = 2.
"""

from pcyclic import brute_force_witness, family_T4, make_field, verify_instance

for p in (7, 11):
    ctx = make_field(p, 2)
    inst = family_T4(p, 2, 3)
    ver = verify_instance(inst, ctx)
    rep = ver.reports[0]
    print(f"p={p} m=2 v={inst.v} w={inst.distinct_w()}: hypotheses pass={inst.hypotheses_pass}, "
          f"predicted d={inst.predicted_d}, verified d={rep.d}")
    print(f"   weight-3 word at positions {rep.witness.support} with coefficients {rep.witness.coefficients}, "
          f"re-verified: {rep.witness.is_codeword(ctx, rep.code.exponents)}")
    if rep.n <= 64:
        print("   oracle witness:", brute_force_witness(rep.code))

# In contrast m = 4 behaves as predicted.
ctx = make_field(5, 4, (2, 4, 4, 0, 1))
ver = verify_instance(family_T4(5, 4, 3), ctx)
print("p=5 m=4:", [list(r.params) for r in ver.reports], "agrees:", ver.agrees)
