"""Weyl group elements, tau-invariants, Bruhat order and the set of
highest-weight parameters ``W_hw = {w : -w rho is Delta_c^+ dominant}``.

An element is stored as the images of the ambient basis vectors; two
elements are equal exactly when their actions agree.  Reduced words ride
along when they are known but never take part in comparisons.
"""

from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .rootsys import RootSystem, Vector, coroot_pairing, pairing, reflect

__all__ = [
    "WeylElement",
    "identity",
    "from_word",
    "simple_reflection",
    "tau",
    "length",
    "bruhat_leq",
    "long_element",
    "enumerate_script_w",
    "CACHE_ENV",
    "CACHE_VERSION",
]

CACHE_ENV = "HWCC_CACHE_DIR"
CACHE_VERSION = 1


@dataclass(frozen=True)
class WeylElement:
    rs: RootSystem = field(compare=False, repr=False)
    cols: tuple[Vector, ...]
    word: tuple[int, ...] | None = field(default=None, compare=False)

    def __call__(self, v: Sequence[Fraction]) -> Vector:
        out = [Fraction(0)] * len(self.cols)
        for c, col in zip(v, self.cols):
            if c:
                for k, x in enumerate(col):
                    out[k] += c * x
        return tuple(out)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word
        return WeylElement(self.rs, tuple(self(c) for c in other.cols), word)

    def inverse(self) -> "WeylElement":
        # the action is orthogonal, so the inverse is the transpose
        d = len(self.cols)
        word = tuple(reversed(self.word)) if self.word is not None else None
        return WeylElement(
            self.rs, tuple(tuple(self.cols[m][k] for m in range(d)) for k in range(d)), word
        )

    def times_simple(self, i: int) -> "WeylElement":
        """Return ``w s_i``."""
        a = self.rs.simple(i)
        wa = self(a)
        aa = pairing(a, a)
        cols = []
        for k, col in enumerate(self.cols):
            c = 2 * a[k] / aa
            cols.append(col if c == 0 else tuple(x - c * y for x, y in zip(col, wa)))
        word = self.word + (i,) if self.word is not None else None
        return WeylElement(self.rs, tuple(cols), word)

    def simple_times(self, i: int) -> "WeylElement":
        """Return ``s_i w``."""
        a = self.rs.simple(i)
        word = (i,) + self.word if self.word is not None else None
        return WeylElement(self.rs, tuple(reflect(c, a) for c in self.cols), word)

    def inverse_rho(self) -> Vector:
        """``w^{-1} rho``, which determines ``w`` since rho is regular."""
        rho = self.rs.rho
        return tuple(pairing(col, rho) for col in self.cols)

    @property
    def length(self) -> int:
        u = self.inverse_rho()
        # w(beta) < 0  iff  <w beta, rho> = <beta, w^{-1} rho> < 0
        return sum(1 for b in self.rs.positive_roots if pairing(b, u) < 0)

    @property
    def tau(self) -> frozenset[int]:
        u = self.inverse_rho()
        return frozenset(
            i + 1 for i, a in enumerate(self.rs.simple_roots) if pairing(a, u) < 0
        )

    @property
    def is_reduced_word(self) -> bool:
        return self.word is not None and len(self.word) == self.length


def identity(rs: RootSystem) -> WeylElement:
    d = rs.dim
    cols = tuple(tuple(Fraction(int(j == k)) for j in range(d)) for k in range(d))
    return WeylElement(rs, cols, ())


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    return identity(rs).times_simple(i)


def from_word(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    """The product ``s_{i_1} s_{i_2} ... s_{i_k}`` (rightmost acts first)."""
    w = identity(rs)
    for i in word:
        if not 1 <= i <= rs.rank:
            raise IndexError(f"simple reflection index {i} out of range 1..{rs.rank}")
        w = w.times_simple(i)
    return w


def tau(w: WeylElement) -> frozenset[int]:
    """Indices of the simple roots sent to negative roots by ``w``."""
    return w.tau


def length(w: WeylElement) -> int:
    return w.length


def _descents(rs: RootSystem, u: Vector) -> list[int]:
    return [i for i, a in enumerate(rs.simple_roots) if pairing(a, u) < 0]


def bruhat_leq(y: WeylElement, w: WeylElement) -> bool:
    """Bruhat comparison ``y <= w``.

    Uses the lifting property: for a right descent ``s`` of ``w``, ``y <= w``
    iff ``ys <= ws`` when ``s`` is also a descent of ``y`` and iff
    ``y <= ws`` otherwise.  Both elements are tracked through ``x^{-1} rho``,
    on which right multiplication by ``s`` acts as the reflection ``s``.
    """
    if y.rs != w.rs:
        raise ValueError("elements of different root systems")
    rs = w.rs
    uy, uw = y.inverse_rho(), w.inverse_rho()
    ly, lw = y.length, w.length
    while True:
        if ly > lw:
            return False
        if ly == lw:
            return uy == uw
        if ly == 0:
            return True
        s = _descents(rs, uw)[0]
        a = rs.simple_roots[s]
        if pairing(a, uy) < 0:
            uy = reflect(uy, a)
            ly -= 1
        uw = reflect(uw, a)
        lw -= 1


def long_element(rs: RootSystem, subset: Iterable[int] | None = None) -> WeylElement:
    """Longest element of the parabolic subgroup generated by ``subset``
    (all simple reflections when omitted)."""
    idx = sorted(set(range(1, rs.rank + 1) if subset is None else subset))
    w = identity(rs)
    while True:
        t = w.tau
        missing = [i for i in idx if i not in t]
        if not missing:
            return w
        w = w.times_simple(missing[0])


def _coset_words(rs: RootSystem, noncompact: int) -> list[tuple[int, ...]]:
    """Breadth-first search over the W-orbit of the fundamental weight dual
    to ``alpha_noncompact``.

    Returns, for each orbit point ``v varpi``, the word ``(i_1, ..., i_k)``
    with ``v = s_{i_k} ... s_{i_1}`` minimal in ``v W_c``.
    """
    start = rs.fundamental_weight(noncompact)
    seen = {start: ()}
    order = [start]
    queue = deque([start])
    while queue:
        lam = queue.popleft()
        for i, a in enumerate(rs.simple_roots, start=1):
            if coroot_pairing(lam, a) > 0:
                mu = reflect(lam, a)
                if mu not in seen:
                    seen[mu] = seen[lam] + (i,)
                    order.append(mu)
                    queue.append(mu)
    return [seen[lam] for lam in order]


def _cache_path(label: str) -> Path | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    return Path(root) / f"script_w_{label}_v{CACHE_VERSION}.json"


def save_script_w_cache(path: Path, label: str, elems: Sequence[WeylElement]) -> None:
    """Write ``W_hw`` as reduced words (JSON, versioned)."""
    payload = {
        "format": "hwcc.script_w",
        "version": CACHE_VERSION,
        "group": label,
        "words": [list(e.word) for e in elems],
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=1) + "\n")


def load_script_w_cache(path: Path, rs: RootSystem, label: str) -> list[WeylElement] | None:
    try:
        payload = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if payload.get("version") != CACHE_VERSION or payload.get("group") != label:
        return None
    return [from_word(rs, w) for w in payload["words"]]


def _order_key(hd, w: WeylElement):
    rs = hd.rs
    if rs.type_label == "B" and hd.noncompact_index == 1:
        # -w rho has first coordinate +-(k - 1/2)
        x1 = -w(rs.rho)[0]
        k = int(abs(x1) + Fraction(1, 2))
        return (k, 0 if x1 > 0 else 1)
    return (w.length,)


def enumerate_script_w(hd, *, use_cache: bool = True) -> list[WeylElement]:
    """All ``w`` with ``-w rho`` dominant for the compact positive roots.

    Each element is ``w = w_c * u`` with ``w_c`` the long element of ``W_c``
    and ``u`` the inverse of a minimal coset representative, so its word is
    reduced.  E6 and E7 come back in the order of the published tables,
    type B ordered by ``(k, +/-)``, everything else by length.
    """
    from . import fixtures

    rs = hd.rs
    label = hd.label
    path = _cache_path(label) if use_cache else None
    elems = load_script_w_cache(path, rs, label) if path is not None else None
    if elems is None:
        wc = long_element(rs, hd.compact_simple)
        elems = []
        for word in _coset_words(rs, hd.noncompact_index):
            w = wc
            for i in word:
                w = w.times_simple(i)
            elems.append(w)
        if label in fixtures.SCRIPT_W_WORDS:
            pos = {w: k for k, w in enumerate(elems)}
            ordered = []
            for word in fixtures.SCRIPT_W_WORDS[label]:
                w = wc
                for i in word:
                    w = w.times_simple(i)
                if w not in pos:
                    raise AssertionError(f"table word {word} is not in W_hw({label})")
                ordered.append(elems[pos[w]])
            if len(set(ordered)) != len(elems):
                raise AssertionError(f"table words do not exhaust W_hw({label})")
            elems = ordered
        else:
            elems.sort(key=lambda w: _order_key(hd, w))
        if path is not None:
            save_script_w_cache(path, label, elems)

    neg_rho = tuple(-x for x in rs.rho)
    for w in elems:
        lam = w(neg_rho)
        if any(pairing(lam, rs.simple(i)) < 0 for i in hd.compact_simple):
            raise AssertionError("enumerated element violates compact dominance")
    return elems
