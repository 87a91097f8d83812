"""Exact root systems of types A, B, C, D, E6 and E7.

Vectors are tuples of :class:`fractions.Fraction` in an ambient Euclidean
space with the standard dot product.  Nothing here uses floating point.

>>> rs = build("E", 6)
>>> len(rs.positive_roots)
36
>>> rs.simple_roots[1]
(Fraction(1, 1), Fraction(1, 1), Fraction(0, 1), Fraction(0, 1), Fraction(0, 1), Fraction(0, 1), Fraction(0, 1), Fraction(0, 1))
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

Vector = tuple[Fraction, ...]

__all__ = [
    "Vector",
    "RootSystem",
    "build",
    "pairing",
    "reflect",
    "coroot_pairing",
    "vec",
    "add",
    "sub",
    "scale",
]


def vec(*entries) -> Vector:
    return tuple(Fraction(e) for e in entries)


def pairing(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    """Standard symmetric bilinear form."""
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def coroot_pairing(v: Sequence[Fraction], a: Sequence[Fraction]) -> Fraction:
    """Return <v, a^vee> = 2<v,a>/<a,a>."""
    return 2 * pairing(v, a) / pairing(a, a)


def add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def scale(c, a: Vector) -> Vector:
    return tuple(c * x for x in a)


def reflect(v: Sequence[Fraction], a: Sequence[Fraction]) -> Vector:
    """Reflect ``v`` in the hyperplane orthogonal to the nonzero vector ``a``."""
    aa = pairing(a, a)
    if aa == 0:
        raise ValueError("cannot reflect in a zero vector")
    c = 2 * pairing(v, a) / aa
    return tuple(x - c * y for x, y in zip(v, a))


def _unit(dim: int, i: int, c=1) -> list[Fraction]:
    v = [Fraction(0)] * dim
    v[i] = Fraction(c)
    return v


def _simple_roots(type_label: str, rank: int) -> list[Vector]:
    t = type_label.upper()
    n = rank
    if t == "A":
        if n < 1:
            raise ValueError("type A needs rank >= 1")
        roots = []
        for i in range(n):
            v = _unit(n + 1, i)
            v[i + 1] = Fraction(-1)
            roots.append(tuple(v))
        return roots
    if t in ("B", "C", "D"):
        minimum = {"B": 2, "C": 1, "D": 3}[t]
        if n < minimum:
            raise ValueError(f"type {t} needs rank >= {minimum}, got {n}")
        roots = []
        for i in range(n - 1):
            v = _unit(n, i)
            v[i + 1] = Fraction(-1)
            roots.append(tuple(v))
        if t == "B":
            roots.append(tuple(_unit(n, n - 1)))
        elif t == "C":
            roots.append(tuple(_unit(n, n - 1, 2)))
        else:
            v = _unit(n, n - 1)
            v[n - 2] = Fraction(1)
            roots.append(tuple(v))
        return roots
    if t in ("E", "E6", "E7"):
        if t != "E":
            n = int(t[1])
        if n not in (6, 7):
            raise ValueError(f"only E6 and E7 are supported, got E{n}")
        half = Fraction(1, 2)
        # Bourbaki numbering in R^8
        a1 = (half, -half, -half, -half, -half, -half, -half, half)
        a2 = tuple([Fraction(1), Fraction(1)] + [Fraction(0)] * 6)
        roots = [a1, a2]
        for i in range(n - 2):
            v = _unit(8, i + 1)
            v[i] = Fraction(-1)
            roots.append(tuple(v))
        return roots
    raise ValueError(f"unsupported root system type {type_label!r}")


@dataclass(frozen=True)
class RootSystem:
    """A finite crystallographic root system with a fixed simple system.

    ``coefficients[beta]`` holds the expansion of a root in simple roots.
    Simple roots are numbered from 1 in the public API (``simple(i)``), but
    stored 0-based.
    """

    type_label: str
    rank: int
    simple_roots: tuple[Vector, ...]
    positive_roots: tuple[Vector, ...]
    rho: Vector
    coefficients: dict = field(repr=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.simple_roots[0])

    @property
    def roots(self) -> tuple[Vector, ...]:
        return self.positive_roots + tuple(scale(-1, b) for b in self.positive_roots)

    def simple(self, i: int) -> Vector:
        """Simple root ``alpha_i`` (1-based)."""
        if not 1 <= i <= self.rank:
            raise IndexError(f"simple root index {i} out of range 1..{self.rank}")
        return self.simple_roots[i - 1]

    def is_root(self, v: Vector) -> bool:
        return v in self.coefficients

    def is_positive(self, v: Vector) -> bool:
        """True for positive roots; a root is positive iff <v, rho> > 0."""
        return pairing(v, self.rho) > 0

    def height(self, v: Vector) -> int:
        return sum(self.coefficients[v])

    def is_long(self, v: Vector) -> bool:
        return pairing(v, v) == max(pairing(b, b) for b in self.simple_roots)

    def cartan_matrix(self) -> list[list[int]]:
        return [
            [int(coroot_pairing(a, b)) for b in self.simple_roots]
            for a in self.simple_roots
        ]

    def fundamental_weight(self, i: int) -> Vector:
        """The weight in the span of the roots dual to the coroot of ``alpha_i``."""
        from ._exact import solve

        m = self.rank
        # <sum_k c_k alpha_k, alpha_j^vee> = delta_ij
        rows = [
            [coroot_pairing(self.simple_roots[k], self.simple_roots[j]) for k in range(m)]
            for j in range(m)
        ]
        rhs = [Fraction(int(j == i - 1)) for j in range(m)]
        c = solve(rows, rhs)
        out = [Fraction(0)] * self.dim
        for ck, a in zip(c, self.simple_roots):
            for t in range(self.dim):
                out[t] += ck * a[t]
        return tuple(out)

    def adjacent_pairs(self) -> list[tuple[int, int]]:
        """Pairs (i, j), i < j, of simple roots joined in the Dynkin diagram."""
        return [
            (i + 1, j + 1)
            for i in range(self.rank)
            for j in range(i + 1, self.rank)
            if pairing(self.simple_roots[i], self.simple_roots[j]) != 0
        ]


_EXPECTED_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63}[n],
}


def build(type_label: str, rank: int | None = None) -> RootSystem:
    """Construct the root system of the given type and rank.

    ``type_label`` is one of ``A``, ``B``, ``C``, ``D``, ``E`` (with rank 6
    or 7), or the shorthands ``E6``/``E7``.  Type B uses the simple roots
    ``e_1 - e_2, ..., e_{n-1} - e_n, e_n``; E6 and E7 use the Bourbaki
    realization in R^8.
    """
    t = type_label.upper()
    if t in ("E6", "E7"):
        if rank not in (None, int(t[1])):
            raise ValueError(f"{t} has rank {t[1]}, got {rank}")
        rank = int(t[1])
        t = "E"
    if rank is None:
        raise ValueError("rank is required")
    simple = _simple_roots(t, rank)

    # closure of the simple roots under simple reflections, tracking the
    # expansion in simple roots alongside the ambient coordinates
    cartan = [[int(coroot_pairing(a, b)) for b in simple] for a in simple]
    coeffs: dict[Vector, tuple[int, ...]] = {}
    frontier = []
    for i, a in enumerate(simple):
        c = tuple(int(k == i) for k in range(rank))
        coeffs[a] = c
        frontier.append((a, c))
    while frontier:
        nxt = []
        for v, c in frontier:
            for i, a in enumerate(simple):
                # <v, a_i^vee> from the expansion
                k = sum(c[j] * cartan[j][i] for j in range(rank))
                if k == 0:
                    continue
                w = tuple(x - k * y for x, y in zip(v, a))
                if w not in coeffs:
                    wc = list(c)
                    wc[i] -= k
                    coeffs[w] = tuple(wc)
                    nxt.append((w, tuple(wc)))
        frontier = nxt

    positive = sorted(
        (v for v, c in coeffs.items() if all(x >= 0 for x in c)),
        key=lambda v: (sum(coeffs[v]), tuple(-x for x in coeffs[v])),
    )
    if len(positive) != _EXPECTED_COUNT[t](rank) or len(coeffs) != 2 * len(positive):
        raise AssertionError(f"root generation failed for {t}{rank}")
    dim = len(simple[0])
    rho = [Fraction(0)] * dim
    for b in positive:
        for k in range(dim):
            rho[k] += b[k] / 2
    return RootSystem(
        type_label=t,
        rank=rank,
        simple_roots=tuple(simple),
        positive_roots=tuple(positive),
        rho=tuple(rho),
        coefficients=coeffs,
    )
