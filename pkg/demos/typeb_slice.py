"""SO_e(2, 2n-1): the 2n modules, their characteristic cycles, and the
slice through B_{w_2^-} inside the Schubert variety of w_1^+."""

from fractions import Fraction

from hwcc.typeb import all_params, build_wk, cc_so, closed_condition, slice_membership, verify_slice

n = 5
for k, s in all_params(n):
    w = build_wk(n, k, s)
    terms = " + ".join(f"[w_{kk}^{ss}]" for (kk, ss), _ in cc_so(n, k, s))
    print(f"w_{k}^{s}  length {w.length:>2}  tau {sorted(w.tau)}  CC = {terms}")

# a point of the cone 2 x_{n-1} x_{n+1} + x_n^2 = 0 and one just off it
on = [Fraction(0)] * (n - 2) + [Fraction(-2), Fraction(2), Fraction(1)]
off = list(on)
off[-1] = Fraction(2)
for x in (on, off):
    print([str(v) for v in x], "member" if slice_membership(n, x) else "not a member",
          "| closed form agrees" if slice_membership(n, x) == closed_condition(n, x) else "| MISMATCH")

rep = verify_slice(n, samples=500, seed=1)
print(f"{rep.samples} seeded points, {rep.members} in the slice, {len(rep.mismatches)} mismatches")
