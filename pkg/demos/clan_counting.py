"""Sp(2n, R): h-vectors, the terms D(c) of a characteristic cycle, and
how often the cycle is irreducible."""

from math import comb

from hwcc.clans import (
    Clan,
    asymptotic_ratio,
    count_irreducible,
    d_set_closed,
    geometric_cell,
    h_vector,
    irreducible_count_recurrence,
    j_set,
    ltc_clans,
)

c = Clan.parse("1+23+4++5")
print(f"clan {c.numbered()}: h = {h_vector(c)}, cell {geometric_cell(c)}, J = {sorted(j_set(c))}")
for d in sorted(d_set_closed(c), key=geometric_cell):
    print(f"  term {d.numbered():<20} cell {geometric_cell(d)}")
print("leading terms:", ", ".join(d.numbered() for d in sorted(ltc_clans(c))))

print(" n  N(n)  of 2^n")
for n in range(1, 13):
    print(f"{n:>2} {count_irreducible(n):>5}  {2 ** n:>5}")

n = 200
print(f"N({n}) = {irreducible_count_recurrence(n)} (closed form agrees: "
      f"{irreducible_count_recurrence(n) == comb(n + 1, n // 2)})")
for l in (10, 50, 500):
    print(f"l={l}: N(2l)/4^l divided by 2/sqrt(pi l) = {float(asymptotic_ratio(l)):.6f}")
