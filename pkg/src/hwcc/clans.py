"""Clans for Sp(2n, R) highest weight modules and their characteristic
cycles.

A clan is a string over ``+`` and ``.``; any natural-number entry is
written ``.`` since only the positions of the numbers matter.  The
h-vector is built reading the clan right to left: ``h_j`` looks at entry
``n - j + 1``.  Its last value ``h_n`` is the geometric cell, the rank of
the moment-map image.

The characteristic cycle of ``L_c`` is the sum over ``D(c)``, computed
either by the recursion on the first entry or in closed form from
``J(c)``; all multiplicities are one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

__all__ = [
    "PLUS",
    "DOT",
    "Clan",
    "all_clans",
    "h_vector",
    "geometric_cell",
    "j_set",
    "d_set_recursive",
    "d_set_closed",
    "is_cc_irreducible",
    "ltc_clans",
    "count_by_cell",
    "count_irreducible",
    "count_irreducible_by_cell",
    "path_count_oracle",
    "irreducible_count_recurrence",
    "asymptotic_ratio",
]

PLUS = "+"
DOT = "."


@dataclass(frozen=True, order=True)
class Clan:
    entries: str

    def __post_init__(self):
        if not self.entries or set(self.entries) - {PLUS, DOT}:
            raise ValueError(f"a clan is a nonempty string over '+' and '.', got {self.entries!r}")

    @classmethod
    def parse(cls, text: str) -> "Clan":
        """Accepts ``+`` for a plus entry and any single digit, letter, dot
        or bullet for a number entry; whitespace is ignored."""
        out = []
        for ch in text:
            if ch.isspace():
                continue
            if ch == "+":
                out.append(PLUS)
            elif ch.isalnum() or ch in ".•*":
                out.append(DOT)
            else:
                raise ValueError(f"bad clan character {ch!r} in {text!r}")
        return cls("".join(out))

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> str:
        """Entry ``c_i``, 1-based."""
        if not 1 <= i <= len(self.entries):
            raise IndexError(i)
        return self.entries[i - 1]

    def __str__(self) -> str:
        return self.entries

    def with_entry(self, i: int, value: str) -> "Clan":
        s = self.entries
        return Clan(s[: i - 1] + value + s[i:])

    def numbered(self) -> str:
        """The clan with its number entries written 1, 2, 3, ..."""
        k = 0
        out = []
        for ch in self.entries:
            if ch == DOT:
                k += 1
                out.append(str(k))
            else:
                out.append(ch)
        return " ".join(out)


def all_clans(n: int):
    for bits in itertools.product((DOT, PLUS), repeat=n):
        yield Clan("".join(bits))


@lru_cache(maxsize=None)
def _h(s: str) -> tuple[int, ...]:
    n = len(s)
    h = []
    prev = 0
    for j in range(1, n + 1):
        ch = s[n - j]
        if ch == DOT:
            cur = prev
        elif prev == j - 1:
            cur = prev + 1
        else:
            cur = prev + 2
        h.append(cur)
        prev = cur
    return tuple(h)


def h_vector(c: Clan) -> tuple[int, ...]:
    """``(h_1, ..., h_n)``."""
    return _h(c.entries)


def geometric_cell(c: Clan) -> int:
    return h_vector(c)[-1]


def j_set(c: Clan) -> frozenset[int]:
    """Odd ``j < n`` with ``h_{j+1} = h_j = j``; checked against the
    equivalent ``h_j = j`` with ``c_{n-j}`` a number entry."""
    h = (None,) + h_vector(c)
    n = len(c)
    a = {j for j in range(1, n, 2) if h[j + 1] == h[j] == j}
    b = {j for j in range(1, n, 2) if h[j] == j and c[n - j] == DOT}
    if a != b:
        raise AssertionError(f"the two descriptions of J disagree on {c}: {sorted(a)} vs {sorted(b)}")
    return frozenset(a)


@lru_cache(maxsize=None)
def _d_rec(s: str) -> frozenset[str]:
    n = len(s)
    if n == 1:
        return frozenset({s})
    head, rest = s[0], s[1:]
    tails = _d_rec(rest)
    if head == PLUS:
        return frozenset(PLUS + t for t in tails)
    out = {DOT + t for t in tails}
    if n % 2 == 0 and _h(rest)[-1] == n - 1:
        out |= {PLUS + t for t in tails}
    return frozenset(out)


def d_set_recursive(c: Clan) -> frozenset[Clan]:
    """``D(c)`` by recursion on the leading entry."""
    return frozenset(Clan(s) for s in _d_rec(c.entries))


def d_set_closed(c: Clan) -> frozenset[Clan]:
    """All clans agreeing with ``c`` away from the positions ``n - j``,
    ``j`` in ``J(c)``."""
    n = len(c)
    free = sorted(n - j for j in j_set(c))
    out = set()
    for bits in itertools.product((DOT, PLUS), repeat=len(free)):
        d = c
        for i, b in zip(free, bits):
            d = d.with_entry(i, b)
        out.add(d)
    return frozenset(out)


def is_cc_irreducible(c: Clan) -> bool:
    return not j_set(c)


def ltc_clans(c: Clan) -> frozenset[Clan]:
    """Terms of ``D(c)`` with the largest geometric cell."""
    d = d_set_closed(c)
    top = max(geometric_cell(x) for x in d)
    return frozenset(x for x in d if geometric_cell(x) == top)


# counting

ENUMERATION_CAP = 20


def _check_enum(n: int) -> None:
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > ENUMERATION_CAP:
        raise ValueError(
            f"enumerating 2^{n} clans is capped at n = {ENUMERATION_CAP}; use the recurrence"
        )


def count_by_cell(n: int) -> dict[int, int]:
    """``|C_g^n(j)|`` for ``j = 0..n`` by enumerating clans."""
    _check_enum(n)
    out = dict.fromkeys(range(n + 1), 0)
    for c in all_clans(n):
        out[geometric_cell(c)] += 1
    return out


def count_irreducible_by_cell(n: int, j: int | None = None):
    """``N(n, j)``: clans in cell ``j`` with irreducible cycle, by
    enumeration.  Without ``j`` the whole row ``{j: N(n, j)}``."""
    _check_enum(n)
    out = dict.fromkeys(range(n + 1), 0)
    for c in all_clans(n):
        if is_cc_irreducible(c):
            out[geometric_cell(c)] += 1
    return out if j is None else out.get(j, 0)


def count_irreducible(n: int) -> int:
    """``N(n)`` by enumeration, summing every cell including ``j = 0``."""
    return sum(count_irreducible_by_cell(n).values())


def _path_counts(n: int, restricted: bool) -> list[dict[int, int]]:
    # column m holds labels 0..m, with label m in the top row
    cols = [{0: 1}]
    for m in range(n):
        nxt: dict[int, int] = {}
        for j, cnt in cols[m].items():
            if j == m:
                moves = (j + 1, j)  # west, southwest
            else:
                moves = (j + 2, j)  # northwest, southwest
            for t in moves:
                if restricted and t % 2 == 1 and t != m + 1:
                    continue
                nxt[t] = nxt.get(t, 0) + cnt
        cols.append(nxt)
    return cols


def path_count_oracle(n: int, j: int, *, restricted: bool = False) -> int:
    """Paths in the label array from the 0 in column 0 to label ``j`` in
    column ``n``.  ``restricted`` forbids odd labels off the top row."""
    if not 0 <= j <= n:
        raise ValueError(f"label {j} is not in column {n}")
    return _path_counts(n, restricted)[n].get(j, 0)


def irreducible_count_recurrence(n: int) -> int:
    """``N(n)`` from ``N(n) = 2 N(n-1)`` (n odd) and
    ``N(n) = 4 N(n-2) - N(n-2, n-2)`` (n even), with ``N(1) = 2``,
    ``N(2) = 3`` and ``N(m, m)`` from the restricted path count."""
    if n < 1:
        raise ValueError("n must be at least 1")
    top = _path_counts(max(n, 2), True)
    vals = {1: 2, 2: 3}
    for m in range(3, n + 1):
        vals[m] = 2 * vals[m - 1] if m % 2 else 4 * vals[m - 2] - top[m - 2].get(m - 2, 0)
    return vals[n]


def asymptotic_ratio(l: int, *, dps: int = 50):
    """``(N(2l) / 2^{2l}) / (2 / sqrt(pi l))`` as an mpmath float."""
    import mpmath

    if l < 1:
        raise ValueError("l must be at least 1")
    with mpmath.workdps(dps):
        exact = mpmath.mpf(comb(2 * l + 1, l)) / mpmath.mpf(4) ** l
        return +(exact / (2 / mpmath.sqrt(mpmath.pi * l)))
