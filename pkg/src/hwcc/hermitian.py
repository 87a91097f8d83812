"""Hermitian symmetric structure attached to a root system.

A :class:`HermitianDatum` fixes the noncompact simple root; from it follow
the noncompact positive roots ``Delta(p_+)`` (coefficient one on the
noncompact simple root), the compact positive roots, and a cascade of
strongly orthogonal roots whose length is the real rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import fixtures
from .rootsys import RootSystem, Vector, add, build, pairing, sub
from .weyl import WeylElement, enumerate_script_w

__all__ = [
    "HermitianDatum",
    "build_hermitian",
    "n_cap_nw",
    "strongly_orthogonal",
    "so_rank",
    "mu_rank",
    "av_rank",
    "typeb_param",
]


@dataclass(frozen=True)
class HermitianDatum:
    rs: RootSystem
    noncompact_index: int
    label: str
    compact_positive: tuple[Vector, ...]
    p_plus: tuple[Vector, ...]
    cascade: tuple[Vector, ...]

    @property
    def real_rank(self) -> int:
        return len(self.cascade)

    @property
    def compact_simple(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.rs.rank + 1) if i != self.noncompact_index)

    @property
    def simply_laced(self) -> bool:
        return len({pairing(a, a) for a in self.rs.simple_roots}) == 1

    @cached_property
    def script_w(self) -> tuple[WeylElement, ...]:
        return tuple(enumerate_script_w(self))

    @cached_property
    def index(self) -> dict[WeylElement, int]:
        """1-based position of each element of ``script_w``."""
        return {w: k for k, w in enumerate(self.script_w, start=1)}


# (label prefix, real form) -> noncompact simple root, given the rank
_NONCOMPACT = {
    "B": lambda n, p: 1,
    "C": lambda n, p: n,
    "E6": lambda n, p: 1,
    "E7": lambda n, p: 7,
}


def strongly_orthogonal(rs: RootSystem, a: Vector, b: Vector) -> bool:
    """Orthogonal, and neither the sum nor the difference is a root."""
    return pairing(a, b) == 0 and not rs.is_root(add(a, b)) and not rs.is_root(sub(a, b))


def _cascade(rs: RootSystem, p_plus) -> tuple[Vector, ...]:
    remaining = list(p_plus)
    out = []
    while remaining:
        top = max(remaining, key=lambda v: (rs.height(v), rs.coefficients[v]))
        out.append(top)
        remaining = [v for v in remaining if strongly_orthogonal(rs, v, top)]
    return tuple(out)


def build_hermitian(type_label: str, rank: int | None = None, *, p: int | None = None,
                    real_form: str | None = None) -> HermitianDatum:
    """Hermitian datum for a simple group of hermitian type.

    ``A`` takes ``p`` (the group ``SU(p, q)`` with ``p + q = rank + 1``,
    default ``p = 1``); ``D`` takes ``real_form`` in ``{"so2", "sostar"}``
    for ``SO_e(2, 2n-2)`` (default) or ``SO*(2n)``.
    """
    t = type_label.upper()
    if t in ("E6", "E7"):
        rank = int(t[1])
    elif t == "E":
        t = f"E{rank}"
    if t not in ("A", "B", "C", "D", "E6", "E7"):
        raise ValueError(f"{type_label!r} is not of hermitian type")
    if rank is None:
        raise ValueError("rank is required")
    rs = build(t[0], rank)
    if t == "A":
        p = 1 if p is None else p
        if not 1 <= p <= rank:
            raise ValueError(f"SU(p,q) needs 1 <= p <= {rank}, got p={p}")
        k, label = p, f"A{rank}(p={p})"
    elif t == "D":
        form = real_form or "so2"
        if form == "so2":
            k, label = 1, f"D{rank}"
        elif form == "sostar":
            k, label = rank, f"D{rank}*"
        else:
            raise ValueError(f"unknown real form {real_form!r} for type D")
    else:
        if real_form is not None or p is not None:
            raise ValueError(f"type {t} has a single hermitian real form")
        k = _NONCOMPACT[t](rank, p)
        label = t if t.startswith("E") else f"{t}{rank}"

    which = k - 1
    p_plus = tuple(b for b in rs.positive_roots if rs.coefficients[b][which] == 1)
    compact = tuple(b for b in rs.positive_roots if rs.coefficients[b][which] == 0)
    if len(p_plus) + len(compact) != len(rs.positive_roots):
        raise ValueError(f"alpha_{k} does not define a hermitian structure on {t}{rank}")
    return HermitianDatum(
        rs=rs,
        noncompact_index=k,
        label=label,
        compact_positive=compact,
        p_plus=p_plus,
        cascade=_cascade(rs, p_plus),
    )


def n_cap_nw(hd: HermitianDatum, w: WeylElement) -> frozenset[Vector]:
    """Roots of ``n`` intersected with ``Ad(w) n``: positive roots with
    ``w^{-1}`` of them positive."""
    winv = w.inverse()
    rs = hd.rs
    return frozenset(b for b in rs.positive_roots if rs.is_positive(winv(b)))


def so_rank(hd: HermitianDatum, roots) -> int:
    """Largest weight of a pairwise strongly orthogonal subset of ``roots``.

    Long roots weigh 1 and short roots 2, capped at the real rank.  In the
    simply laced types this is the size of a largest strongly orthogonal
    subset.
    """
    rs = hd.rs
    roots = sorted(roots, key=lambda v: (-rs.height(v), rs.coefficients[v]))
    weight = {v: 1 if rs.is_long(v) else 2 for v in roots}
    cap = hd.real_rank
    compat = {
        v: frozenset(u for u in roots if u != v and strongly_orthogonal(rs, u, v))
        for v in roots
    }
    memo: dict[frozenset, int] = {}

    def best(cands: frozenset) -> int:
        if not cands:
            return 0
        if cands in memo:
            return memo[cands]
        v = next(u for u in roots if u in cands)
        # either v is in the subset or it is not
        top = weight[v] + best(cands & compat[v])
        if top < cap:
            top = max(top, best(cands - {v}))
        memo[cands] = top = min(top, cap)
        return top

    return best(frozenset(roots))


def typeb_param(hd: HermitianDatum, w: WeylElement) -> tuple[int, str]:
    """``(k, sign)`` with ``w = w_k^sign`` for SO_e(2, 2n-1)."""
    from fractions import Fraction

    x1 = -w(hd.rs.rho)[0]
    k = int(abs(x1) + Fraction(1, 2))
    return k, "+" if x1 > 0 else "-"


def _require_member(hd: HermitianDatum, w: WeylElement) -> None:
    if w not in hd.index:
        raise ValueError("element is not in W_hw for this group")


def mu_rank(hd: HermitianDatum, w: WeylElement, *, cross_check: bool = False) -> int:
    """Index ``j`` with moment-map image of the conormal closure to ``B_w``
    equal to the closure of ``O_j``.

    E6/E7 return the tabulated value, type B the closed form in ``(k, +/-)``;
    every other type uses :func:`so_rank` on ``Delta(n cap n^w)``.  With
    ``cross_check`` the tabulated and closed forms are compared to
    :func:`so_rank` and a disagreement raises.
    """
    _require_member(hd, w)
    t = hd.rs.type_label
    if hd.label in fixtures.DATA:
        value = fixtures.DATA[hd.label][hd.index[w] - 1][3]
    elif t == "B":
        k, sign = typeb_param(hd, w)
        n = hd.rs.rank
        value = 2 if sign == "-" else (0 if k == n else 1)
    else:
        return so_rank(hd, n_cap_nw(hd, w))
    if cross_check:
        h = so_rank(hd, n_cap_nw(hd, w))
        if h != value:
            raise AssertionError(f"mu-rank {value} disagrees with strongly orthogonal rank {h}")
    return value


def av_rank(hd: HermitianDatum, w: WeylElement) -> int:
    """Index ``j`` with ``AV(L_w)`` the closure of ``O_j``.

    Tabulated for E6/E7; for SO_e(2, 2n-1) it is 0 for the trivial
    representation (``w = w_0``) and 2 otherwise; for the simply laced
    classical groups the characteristic cycle is irreducible so it equals
    :func:`mu_rank`.  Not available for Sp(2n, R), whose answers live in
    clan coordinates.
    """
    _require_member(hd, w)
    t = hd.rs.type_label
    if hd.label in fixtures.DATA:
        return fixtures.DATA[hd.label][hd.index[w] - 1][3]
    if t == "B":
        return 0 if w.length == len(hd.rs.positive_roots) else 2
    if t == "C":
        raise ValueError("AV for Sp(2n,R) is given in clan coordinates; see hwcc.clans")
    return mu_rank(hd, w)
