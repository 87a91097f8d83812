"""Walk through the E6 elimination: build W_hw, filter the candidate
terms of each characteristic cycle, then propagate m(y, w) = m(Ty, Tw)
until every off-diagonal multiplicity is zero."""

from hwcc.ccengine import Mult, candidate_table, eliminate, tab_table
from hwcc.hermitian import build_hermitian

hd = build_hermitian("E6")
print(f"{hd.label}: {len(hd.script_w)} highest weight modules with trivial infinitesimal character")

ct = candidate_table(hd)
open_cells = sum(len(p) - 1 for p in ct.possible.values())
print(f"candidate table leaves {open_cells} off-diagonal entries undecided")
for i in (7, 17, 21):
    print(f"  CC(L_w{i}) may involve {sorted(ct.possible[i])}")

for t, rows in tab_table(hd):
    print(f"{t.name}: " + ", ".join(f"{a}->{b}" for a, b in rows))

state = eliminate(ct)
off = sum(1 for (y, w), v in state.grid.items() if y != w and v is not Mult.ZERO)
print(f"after {state.rounds} rounds and {state.merges} merges: {off} nonzero off-diagonal entries")
print("every CC(L_w) is a single conormal bundle closure" if off == 0 else "elimination incomplete")
