"""Candidate characteristic cycles, T_ab operators and the elimination
fixpoint.

The characteristic cycle of ``L_w`` is ``sum_y m(y, w) [T*_{B_y}]``.  Three
filters cut down where ``m(y, w)`` can be nonzero: ``y <= w`` in Bruhat
order, ``tau(w) <= tau(y)``, and the moment-map orbit of ``y`` must fit
inside the associated variety of ``L_w``.  What survives is the candidate
table.  For equal-length adjacent simple roots ``a, b`` the operator
``T_ab`` preserves multiplicities, ``m(y, w) = m(T y, T w)``, and
propagating that rule to a fixpoint settles the remaining entries.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field

from .hermitian import HermitianDatum, av_rank, mu_rank
from .rootsys import pairing
from .weyl import WeylElement, bruhat_leq

__all__ = [
    "Mult",
    "TabOperator",
    "CandidateTable",
    "MultiplicityState",
    "EliminationConflict",
    "possible_cc",
    "candidate_table",
    "tab_operators",
    "tab_domain",
    "tab_apply",
    "tab_table",
    "eliminate",
    "CCResult",
    "characteristic_cycle",
    "leading_term_cycle",
]


class Mult(enum.Enum):
    ZERO = 0
    ONE = 1
    UNKNOWN = 2


class EliminationConflict(RuntimeError):
    """A ZERO and a ONE were forced equal."""


@dataclass(frozen=True)
class TabOperator:
    alpha: int
    beta: int

    def check(self, hd: HermitianDatum) -> None:
        a, b = hd.rs.simple(self.alpha), hd.rs.simple(self.beta)
        if pairing(a, b) == 0:
            raise ValueError(f"alpha_{self.alpha} and alpha_{self.beta} are orthogonal")
        if pairing(a, a) != pairing(b, b):
            raise NotImplementedError("T_ab for roots of unequal length is unsupported")

    @property
    def name(self) -> str:
        return f"T{self.alpha}{self.beta}"


def tab_operators(hd: HermitianDatum) -> list[TabOperator]:
    """``T_ij`` for each pair ``i < j`` of adjacent simple roots of equal
    length, in the column order of the published tables."""
    rs = hd.rs
    pairs = [
        (i, j) for i, j in rs.adjacent_pairs()
        if pairing(rs.simple(i), rs.simple(i)) == pairing(rs.simple(j), rs.simple(j))
    ]
    if rs.type_label == "E":
        # the tables list (1,3) and (3,4) before (2,4)
        pairs.sort(key=lambda p: (p != (1, 3), p != (3, 4), p))
    return [TabOperator(i, j) for i, j in pairs]


def tab_domain(w: WeylElement, t: TabOperator) -> bool:
    tau = w.tau
    return t.alpha not in tau and t.beta in tau


def tab_apply(w: WeylElement, t: TabOperator) -> WeylElement:
    if not tab_domain(w, t):
        raise ValueError(f"element is not in the domain of {t.name}")
    wa = w.times_simple(t.alpha)
    wb = w.times_simple(t.beta)
    first = t.beta not in wa.tau
    second = t.alpha in wb.tau
    if first == second:
        raise AssertionError(f"{t.name}: {'both' if first else 'neither'} cases apply")
    return wa if first else wb


def tab_table(hd: HermitianDatum) -> list[tuple[TabOperator, list[tuple[int, int]]]]:
    """For each operator, the pairs ``(i, j)`` with ``T(w_i) = w_j``, over
    all ``w_i`` in 1-based table indexing."""
    out = []
    for t in tab_operators(hd):
        t.check(hd)
        rows = []
        for w in hd.script_w:
            if tab_domain(w, t):
                image = tab_apply(w, t)
                if image not in hd.index:
                    raise AssertionError(f"{t.name} leaves W_hw")
                rows.append((hd.index[w], hd.index[image]))
        out.append((t, rows))
    return out


def possible_cc(hd: HermitianDatum, w: WeylElement, *, av: int | None = None) -> set[int]:
    """Indices of the ``y`` in ``W_hw`` not excluded from ``CC(L_w)``.

    ``av`` overrides the associated-variety index of ``L_w``.
    """
    bound = av_rank(hd, w) if av is None else av
    tw = w.tau
    return {
        hd.index[y]
        for y in hd.script_w
        if tw <= y.tau and mu_rank(hd, y) <= bound and bruhat_leq(y, w)
    }


@dataclass
class CandidateTable:
    group: HermitianDatum
    possible: dict[int, frozenset[int]]

    @property
    def script_w(self) -> tuple[WeylElement, ...]:
        return self.group.script_w


def candidate_table(hd: HermitianDatum) -> CandidateTable:
    return CandidateTable(
        hd, {hd.index[w]: frozenset(possible_cc(hd, w)) for w in hd.script_w}
    )


@dataclass
class MultiplicityState:
    """The grid ``(y, w) -> Mult`` over 1-based indices."""

    size: int
    grid: dict[tuple[int, int], Mult] = field(default_factory=dict)
    rounds: int = 0
    merges: int = 0

    @classmethod
    def initial(cls, ct: CandidateTable) -> "MultiplicityState":
        n = len(ct.script_w)
        grid = {}
        for w in range(1, n + 1):
            for y in range(1, n + 1):
                if y == w:
                    grid[y, w] = Mult.ONE
                elif y in ct.possible[w]:
                    grid[y, w] = Mult.UNKNOWN
                else:
                    grid[y, w] = Mult.ZERO
        return cls(n, grid)

    def unknown(self) -> list[tuple[int, int]]:
        return sorted(k for k, v in self.grid.items() if v is Mult.UNKNOWN)

    def column(self, w: int) -> dict[int, Mult]:
        return {y: self.grid[y, w] for y in range(1, self.size + 1)
                if self.grid[y, w] is not Mult.ZERO}

    def settled(self) -> bool:
        return not self.unknown()


def _links(ct: CandidateTable) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    hd = ct.group
    links = []
    for t, rows in tab_table(hd):
        for y, ty in rows:
            for w, tw in rows:
                links.append(((y, w), (ty, tw)))
    return links


def eliminate(ct: CandidateTable, *, seed: int | None = None) -> MultiplicityState:
    """Propagate ``m(y, w) = m(T y, T w)`` until nothing changes.

    With a ``seed`` the links are visited in a shuffled order, which must
    not change the fixpoint.
    """
    state = MultiplicityState.initial(ct)
    links = _links(ct)
    if seed is not None:
        random.Random(seed).shuffle(links)
    changed = True
    while changed:
        changed = False
        state.rounds += 1
        for a, b in links:
            va, vb = state.grid[a], state.grid[b]
            if va is vb:
                continue
            if Mult.UNKNOWN not in (va, vb):
                raise EliminationConflict(f"m{a} = {va.name} but m{b} = {vb.name}")
            known = va if vb is Mult.UNKNOWN else vb
            state.grid[a] = state.grid[b] = known
            state.merges += 1
            changed = True
    return state


@dataclass(frozen=True)
class CCResult:
    """A cycle as ``(term, multiplicity)`` pairs plus how it was obtained."""

    terms: tuple[tuple[object, int], ...]
    provenance: str
    residual: tuple[object, ...] = ()


_CLASSICAL_TAG = "theorem lookup: irreducible for the simply laced classical groups"


def _eliminated(hd: HermitianDatum) -> MultiplicityState:
    cache = _eliminated.__dict__.setdefault("cache", {})
    if hd.label not in cache:
        cache[hd.label] = eliminate(candidate_table(hd))
    return cache[hd.label]


def characteristic_cycle(hd: HermitianDatum, w) -> CCResult:
    """``CC(L_w)``.

    ``w`` is a :class:`WeylElement` of ``W_hw``, or a clan for Sp(2n, R).
    Terms are Weyl elements, except in type C where they are clans.
    """
    t = hd.rs.type_label
    if t == "C":
        from .clans import Clan, d_set_closed

        c = w if isinstance(w, Clan) else Clan.parse(w)
        if len(c) != hd.rs.rank:
            raise ValueError(f"clan of length {len(c)} for Sp({2 * hd.rs.rank},R)")
        return CCResult(tuple((d, 1) for d in sorted(d_set_closed(c))), "clan algorithm")
    if w not in hd.index:
        raise ValueError("element is not in W_hw for this group")
    if t in ("A", "D"):
        return CCResult(((w, 1),), _CLASSICAL_TAG)
    if t == "B":
        from .typeb import build_wk, cc_so

        k, sign = _typeb_param(hd, w)
        terms = tuple((build_wk(hd.rs.rank, kk, ss), m) for (kk, ss), m in cc_so(hd.rs.rank, k, sign))
        return CCResult(terms, "closed form for SO_e(2,2n-1)")
    state = _eliminated(hd)
    col = state.column(hd.index[w])
    terms = tuple((hd.script_w[y - 1], 1) for y, v in sorted(col.items()) if v is Mult.ONE)
    residual = tuple(hd.script_w[y - 1] for y, v in sorted(col.items()) if v is Mult.UNKNOWN)
    return CCResult(terms, "elimination by T_ab propagation", residual)


def _typeb_param(hd, w):
    from .hermitian import typeb_param

    return typeb_param(hd, w)


def leading_term_cycle(hd: HermitianDatum, w) -> CCResult:
    """The terms of ``CC(L_w)`` whose moment-map image is largest."""
    cc = characteristic_cycle(hd, w)
    if hd.rs.type_label == "C":
        from .clans import geometric_cell

        size = {d: geometric_cell(d) for d, _ in cc.terms}
    else:
        size = {y: mu_rank(hd, y) for y, _ in cc.terms}
    if not size:
        return cc
    top = max(size.values())
    return CCResult(tuple((y, m) for y, m in cc.terms if size[y] == top), cc.provenance, cc.residual)
