"""Independent brute-force oracles used only by the tests.

These work on integer numpy arrays of scaled orbit points ``4 x(rho)``.
An element of the Weyl group is determined by where it sends the regular
vector ``rho``, so sets of elements become sets of integer rows.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np


def _int_vec(v, scale=4):
    out = [Fraction(x) * scale for x in v]
    assert all(x.denominator == 1 for x in out)
    return np.array([int(x) for x in out], dtype=np.int64)


def _reflector(rs):
    """Integer data for ``v -> v - <v, a^vee> a`` on scaled vectors."""
    alphas = np.array([_int_vec(a, 2) for a in rs.simple_roots])  # 2a
    norms = (alphas * alphas).sum(axis=1)  # <2a, 2a>

    def reflect(rows, i):
        a = alphas[i]
        # <4v, 2a> / <2a, 2a> = <v, a^vee>, an integer for v in the weight lattice
        num = rows @ a
        k, r = np.divmod(num, norms[i])
        assert not r.any()
        # 4v - <v,a^vee> 4a = 4v - k (2 * 2a)
        return rows - np.outer(k, 2 * a)

    return reflect


def rho_image(w):
    """``4 w(rho)`` as an integer tuple."""
    return tuple(int(x) for x in _int_vec(w(w.rs.rho)))


def subword_set(w) -> set[tuple[int, ...]]:
    """``{4 y(rho) : y a subword product of a reduced word of w}``.

    By the subword property this is exactly the Bruhat interval below w.
    """
    assert w.word is not None and len(w.word) == w.length
    rs = w.rs
    reflect = _reflector(rs)
    rows = _int_vec(rs.rho)[None, :]
    # y = s_{i1} ... s_{ik} applied to rho: fold letters from the right
    for i in reversed(w.word):
        rows = np.unique(np.vstack([rows, reflect(rows, i - 1)]), axis=0)
    return {tuple(int(x) for x in r) for r in rows}


def weyl_orbit_of_rho(rs) -> np.ndarray:
    """All ``4 x(rho)`` for x in W, by breadth-first closure."""
    reflect = _reflector(rs)
    seen = {tuple(_int_vec(rs.rho))}
    frontier = np.array(list(seen))
    while len(frontier):
        new = np.unique(np.vstack([reflect(frontier, i) for i in range(rs.rank)]), axis=0)
        fresh = [tuple(r) for r in new if tuple(r) not in seen]
        seen.update(fresh)
        frontier = np.array(fresh) if fresh else np.empty((0, rs.dim), dtype=np.int64)
    return np.array(sorted(seen))


def script_w_by_brute_force(hd) -> set[tuple[int, ...]]:
    """``{4 w(rho) : -w rho dominant for the compact simple roots}``."""
    orbit = weyl_orbit_of_rho(hd.rs)
    comp = np.array([_int_vec(hd.rs.simple(i), 2) for i in hd.compact_simple])
    if not len(comp):
        return {tuple(int(x) for x in r) for r in orbit}
    ok = ((-orbit) @ comp.T >= 0).all(axis=1)
    return {tuple(int(x) for x in r) for r in orbit[ok]}


def explicit_positive_roots(t: str, n: int) -> set[tuple[Fraction, ...]]:
    """Textbook lists of positive roots in epsilon coordinates."""

    def e(*pairs, dim=n):
        v = [Fraction(0)] * dim
        for i, c in pairs:
            v[i] += c
        return tuple(v)

    out = set()
    if t == "A":
        for i, j in itertools.combinations(range(n + 1), 2):
            out.add(e((i, 1), (j, -1), dim=n + 1))
        return out
    for i, j in itertools.combinations(range(n), 2):
        out.add(e((i, 1), (j, -1)))
        out.add(e((i, 1), (j, 1)))
    if t == "B":
        out |= {e((i, 1)) for i in range(n)}
    if t == "C":
        out |= {e((i, 2)) for i in range(n)}
    return out


def strongly_orthogonal_weight_brute(rs, roots) -> int:
    """Largest weight (long 1, short 2) of a pairwise strongly orthogonal
    subset, by trying every subset."""
    from hwcc.rootsys import add, pairing, sub

    roots = list(roots)

    def so(a, b):
        return pairing(a, b) == 0 and not rs.is_root(add(a, b)) and not rs.is_root(sub(a, b))

    best = 0
    for r in range(len(roots) + 1):
        for sub_ in itertools.combinations(roots, r):
            if all(so(a, b) for a, b in itertools.combinations(sub_, 2)):
                best = max(best, sum(1 if rs.is_long(v) else 2 for v in sub_))
    return best


def lattice_paths(n: int, restricted: bool = False) -> dict[int, int]:
    """Depth-first enumeration of the label-array paths, one at a time."""
    counts: dict[int, int] = {}

    def walk(m, j):
        if m == n:
            counts[j] = counts.get(j, 0) + 1
            return
        steps = [(j + 1), j] if j == m else [(j + 2), j]
        for t in steps:
            if restricted and t % 2 and t != m + 1:
                continue
            walk(m + 1, t)

    walk(0, 0)
    return counts
