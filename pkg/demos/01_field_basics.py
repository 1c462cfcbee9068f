"""Tour of GF(5^4): tables, cosets, minimal polynomials and one code."""

from pcyclic import all_cosets, build_code, classify, make_field, minimal_polynomial
from pcyclic.poly import format_poly

ctx = make_field(5, 4, (2, 4, 4, 0, 1))
print(ctx)
print("alpha^10 as coefficients:", ctx.coeffs(ctx.alpha_pow(10)))
a, b = ctx.alpha_pow(17), ctx.alpha_pow(600)
print("alpha^17 * alpha^600 = alpha^%d" % ctx.discrete_log(ctx.mul(a, b)))

cosets = all_cosets(5, ctx.order)
print(f"{len(cosets)} cyclotomic cosets mod 624; sizes used:", sorted({c.size for c in cosets}))
for i in (0, 1, 3):
    print(f"  m_(alpha^{i}) = {format_poly(minimal_polynomial(ctx, i))}")

code = build_code(ctx, (0, 1, 3))
print("generator of C_5(0,1,3):", format_poly(code.generator))
rep = classify(ctx, 3)
print("parameters", list(rep.params), "optimal" if rep.optimal else "not optimal")
