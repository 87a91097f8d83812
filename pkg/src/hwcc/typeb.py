"""SO_e(2, 2n-1): the elements w_k^+-, their root data, characteristic
cycles, and the Schubert slice through ``B_{w_2^-}`` inside ``Z_{w_1^+}``.

The Weyl group of B_n acts on ``e_1, ..., e_n`` by signed permutations.
``w_k^+ = w_0 c_k`` and ``w_k^- = w_0 s_{e_1} c_k`` where ``c_k`` is the
cycle ``e_1 -> e_2 -> ... -> e_m -> e_1`` with ``m = n - k + 1``.

For the slice, SO(2n+1) preserves the anti-diagonal form and W(B_n) sits
inside S_{2n+1} by letting basis index ``i`` stand for ``e_i``, ``n + 1``
for the zero weight and ``2n + 2 - i`` for ``-e_i``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Sequence

from . import _exact
from .rootsys import Vector, scale
from .weyl import WeylElement, long_element

__all__ = [
    "Param",
    "build_wk",
    "all_params",
    "param_of",
    "Report",
    "verify_lemma_b1",
    "verify_t_lemma",
    "ExtendedPermutation",
    "embed",
    "n_pq",
    "slice_matrix",
    "flag_dims",
    "slice_membership",
    "closed_condition",
    "quadric",
    "sample_points",
    "verify_slice",
    "cc_so",
    "ltc_so",
]

Param = tuple[int, str]


def _datum(n: int):
    from .hermitian import build_hermitian

    cache = _datum.__dict__.setdefault("cache", {})
    if n not in cache:
        cache[n] = build_hermitian("B", n)
    return cache[n]


def _check(n: int, k: int, sign: str) -> None:
    if n < 2:
        raise ValueError(f"SO_e(2,2n-1) needs n >= 2, got {n}")
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}, got {k}")
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def build_wk(n: int, k: int, sign: str) -> WeylElement:
    """The element ``w_k^sign`` of W(B_n)."""
    _check(n, k, sign)
    hd = _datum(n)
    rs = hd.rs
    d = rs.dim
    m = n - k + 1
    # the cycle: e_i -> e_{i+1} for i < m, e_m -> e_1
    cols = []
    for i in range(d):
        j = (i + 1) % m if i < m else i
        cols.append(tuple(Fraction(int(t == j)) for t in range(d)))
    cyc = WeylElement(rs, tuple(cols))
    w = long_element(rs)
    if sign == "-":
        # s_{e_1} is the reflection in the first coordinate
        flip = tuple(
            tuple(Fraction(-1 if (t == i == 0) else int(t == i)) for t in range(d))
            for i in range(d)
        )
        w = w * WeylElement(rs, flip)
    return WeylElement(rs, (w * cyc).cols)


def all_params(n: int) -> list[Param]:
    return [(k, s) for k in range(1, n + 1) for s in ("+", "-")]


def param_of(n: int, w: WeylElement) -> Param:
    from .hermitian import typeb_param

    return typeb_param(_datum(n), w)


def _expected_neg_rho(n: int, k: int, sign: str) -> Vector:
    half = Fraction(1, 2)
    first = (k - half) if sign == "+" else -(k - half)
    rest = [j - half for j in range(n, 0, -1) if j != k]
    return (first, *rest)


# closed forms stated for the w_k^+-


def _length(n, k, sign):
    return (n - 1) ** 2 + n + k - 1 if sign == "+" else (n - 1) ** 2 + n - k


def _tau(n, k, sign):
    full = frozenset(range(1, n + 1))
    if sign == "+":
        return full if k == n else full - {n - k}
    return full - {n} if k == 1 else full - {n - k + 1}


def _e(n, *pairs) -> Vector:
    v = [Fraction(0)] * n
    for i, c in pairs:
        v[i - 1] += c
    return tuple(v)


def _roots(n, k, sign) -> frozenset[Vector]:
    if sign == "+":
        if k == n:
            return frozenset()
        return frozenset(_e(n, (1, 1), (j, -1)) for j in range(2, n - k + 2))
    out = {_e(n, (1, 1))} | {_e(n, (1, 1), (j, -1)) for j in range(2, n + 1)}
    if k >= 2:
        out |= {_e(n, (1, 1), (j, 1)) for j in range(n - k + 2, n + 1)}
    return frozenset(out)


def _mu(n, k, sign):
    if sign == "-":
        return 2
    return 0 if k == n else 1


@dataclass
class Report:
    """Outcome of a verification run: ``checks`` performed and the
    mismatches found as ``(label, computed, expected)``."""

    name: str
    n: int
    checks: int = 0
    mismatches: list[tuple[str, object, object]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def expect(self, label: str, computed, expected) -> None:
        self.checks += 1
        if computed != expected:
            self.mismatches.append((label, computed, expected))

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "checks": self.checks,
            "ok": self.ok,
            "mismatches": [
                {"check": a, "computed": repr(b), "expected": repr(c)} for a, b, c in self.mismatches
            ],
        }


def verify_lemma_b1(n: int) -> Report:
    """Recompute length, tau, ``Delta(n cap n^w)`` and moment-map rank of
    every ``w_k^+-`` and compare with the closed forms."""
    from .hermitian import mu_rank, n_cap_nw, so_rank

    hd = _datum(n)
    rep = Report("lemma-b1", n)
    rep.expect("#W_hw", len(hd.script_w), 2 * n)
    built = {build_wk(n, k, s) for k, s in all_params(n)}
    rep.expect("{w_k} = W_hw", built == set(hd.script_w), True)
    neg_rho = scale(-1, hd.rs.rho)
    for k, s in all_params(n):
        w = build_wk(n, k, s)
        tag = f"w_{k}^{s}"
        rep.expect(f"{tag} -w rho", w(neg_rho), _expected_neg_rho(n, k, s))
        rep.expect(f"{tag} length", w.length, _length(n, k, s))
        rep.expect(f"{tag} tau", w.tau, _tau(n, k, s))
        roots = n_cap_nw(hd, w)
        rep.expect(f"{tag} n cap n^w", roots, _roots(n, k, s))
        rep.expect(f"{tag} roots in p+", roots <= set(hd.p_plus), True)
        rep.expect(f"{tag} mu", mu_rank(hd, w), _mu(n, k, s))
        rep.expect(f"{tag} so-rank", so_rank(hd, roots), _mu(n, k, s))
    for k in range(1, n):
        rep.expect(
            f"tau(w_{k}^+) = tau(w_{k + 1}^-)",
            build_wk(n, k, "+").tau,
            build_wk(n, k + 1, "-").tau,
        )
    return rep


def verify_t_lemma(n: int) -> Report:
    """``T_{a_{n-k}, a_{n-k-1}}`` sends ``w_k^+ -> w_{k+1}^+`` and
    ``w_{k+1}^- -> w_{k+2}^-`` for ``k = 1..n-2``."""
    from .ccengine import TabOperator, tab_apply, tab_domain

    rep = Report("t-lemma", n)
    hd = _datum(n)
    for k in range(1, n - 1):
        t = TabOperator(n - k, n - k - 1)
        t.check(hd)
        for src, dst in (((k, "+"), (k + 1, "+")), ((k + 1, "-"), (k + 2, "-"))):
            w = build_wk(n, *src)
            label = f"T{t.alpha},{t.beta}(w_{src[0]}^{src[1]})"
            inside = tab_domain(w, t)
            rep.expect(f"{label} in domain", inside, True)
            if inside:
                rep.expect(label, param_of(n, tab_apply(w, t)), dst)
    return rep


# characteristic cycles


def cc_so(n: int, k: int, sign: str) -> list[tuple[Param, int]]:
    _check(n, k, sign)
    if sign == "+" and k < n:
        return [((k, "+"), 1), ((k + 1, "-"), 1)]
    return [((k, sign), 1)]


def ltc_so(n: int, k: int, sign: str) -> list[tuple[Param, int]]:
    """Terms of :func:`cc_so` whose moment-map image has the largest
    dimension."""
    terms = cc_so(n, k, sign)
    top = max(_mu(n, *p) for p, _ in terms)
    return [(p, m) for p, m in terms if _mu(n, *p) == top]


# the slice


@dataclass(frozen=True)
class ExtendedPermutation:
    """One-line notation ``perm[i - 1] = w(i)`` on ``{1, ..., 2n+1}``."""

    perm: tuple[int, ...]

    def __post_init__(self):
        size = len(self.perm)
        if sorted(self.perm) != list(range(1, size + 1)) or size % 2 == 0:
            raise ValueError("not a permutation of 1..2n+1")
        if any(self.perm[size - i] != size + 1 - self.perm[i - 1] for i in range(1, size + 1)):
            raise ValueError("permutation does not commute with i -> 2n+2-i")

    def __call__(self, i: int) -> int:
        return self.perm[i - 1]

    def __mul__(self, other: "ExtendedPermutation") -> "ExtendedPermutation":
        return ExtendedPermutation(tuple(self(other(i)) for i in range(1, len(self.perm) + 1)))

    @property
    def n(self) -> int:
        return len(self.perm) // 2


def _weight_index(n: int, v: Vector) -> int:
    nz = [(i, c) for i, c in enumerate(v) if c]
    if len(nz) != 1 or abs(nz[0][1]) != 1:
        raise ValueError("not a signed basis vector")
    i, c = nz[0]
    return i + 1 if c > 0 else 2 * n + 1 - i


def embed(w: WeylElement) -> ExtendedPermutation:
    """The image of a signed permutation in S_{2n+1}."""
    n = w.rs.rank
    perm = [0] * (2 * n + 1)
    perm[n] = n + 1
    for i, col in enumerate(w.cols, start=1):
        j = _weight_index(n, col)
        perm[i - 1] = j
        perm[2 * n + 1 - i] = 2 * n + 2 - j
    return ExtendedPermutation(tuple(perm))


@lru_cache(maxsize=None)
def _embedded(n: int, k: int, sign: str) -> ExtendedPermutation:
    return embed(build_wk(n, k, sign))


def n_pq(w: ExtendedPermutation, p: int, q: int) -> int:
    """``#{i <= p : w(i) <= q}``."""
    return sum(1 for i in range(1, p + 1) if w(i) <= q)


def quadric(n: int, x: Sequence[Fraction]) -> Fraction:
    """``<x, x> = sum_{j=1}^{2n-1} x_j x_{2n-j}`` with ``x_j = 0`` past ``n+1``."""
    full = list(x) + [Fraction(0)] * (2 * n - 1 - len(x))
    return sum((full[j - 1] * full[2 * n - j - 1] for j in range(1, 2 * n)), Fraction(0))


def _unipotent(n: int, x: Sequence[Fraction]) -> list[list[Fraction]]:
    size = 2 * n + 1
    xs = list(x) + [Fraction(0)] * (2 * n - 1 - len(x))
    m = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    half_q = quadric(n, x) / 2
    for j in range(2 * n - 1):
        m[j + 1][0] = xs[j]
        # last row carries -x reversed
        m[size - 1][size - 2 - j] = -xs[j]
    m[size - 1][0] = -half_q
    return m


def slice_matrix(n: int, x: Sequence[Fraction]) -> list[list[Fraction]]:
    """The point of the slice at ``B_{w_2^-}`` with coordinates ``x``:
    unipotent factor times the permutation matrix of ``w_2^-``."""
    if len(x) != n + 1:
        raise ValueError(f"slice coordinates have length n+1 = {n + 1}, got {len(x)}")
    x = [Fraction(v) for v in x]
    u = _unipotent(n, x)
    pw = _embedded(n, 2, "-")
    size = 2 * n + 1
    # column j of the permutation matrix is e_{w(j)}
    return [[u[i][pw(j + 1) - 1] for j in range(size)] for i in range(size)]


def flag_dims(m: list[list[Fraction]], p: int, q: int) -> int:
    """``dim(F_p cap <e_1..e_q>)`` where ``F_p`` is spanned by the first
    ``p`` columns of the invertible matrix ``m``."""
    rows = [r[:p] for r in m[q:]]
    return p - _exact.rank(rows)


def slice_membership(n: int, x: Sequence[Fraction], *, single: bool = False) -> bool:
    """Whether the slice point ``x`` lies in ``Z_{w_1^+}``.

    Tests every rank condition ``dim(F_p cap E_q) >= N_{p,q}(w_1^+)``,
    ``1 <= p <= 2n+1`` and ``1 <= q <= n``; with ``single`` only the one
    at ``(p, q) = (n+2, 1)``.
    """
    if n < 3:
        raise ValueError("the slice is set up for n >= 3")
    m = slice_matrix(n, x)
    target = _embedded(n, 1, "+")
    if single:
        conds = [(n + 2, 1)]
    else:
        conds = [(p, q) for q in range(1, n + 1) for p in range(1, 2 * n + 2)]
    for p, q in conds:
        need = n_pq(target, p, q)
        if need and flag_dims(m, p, q) < need:
            return False
    return True


def closed_condition(n: int, x: Sequence[Fraction]) -> bool:
    """``x_1 = ... = x_{n-2} = 0`` and ``<x, x> = 0``."""
    x = [Fraction(v) for v in x]
    return all(v == 0 for v in x[: n - 2]) and quadric(n, x) == 0


def _rand_q(rng: random.Random, span: int = 9) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, 4))


def _on_quadric(rng: random.Random, n: int) -> list[Fraction]:
    # <x,x> = 2 x_{n-1} x_{n+1} + x_n^2 once the leading entries vanish
    x = [Fraction(0)] * (n + 1)
    xn = _rand_q(rng)
    xn1 = _rand_q(rng) or Fraction(1)
    x[n - 1], x[n] = xn, xn1
    x[n - 2] = -xn * xn / (2 * xn1)
    return x


def sample_points(n: int, count: int, seed: int, *, on_quadric: int = 50) -> list[list[Fraction]]:
    """Deterministic test points: ``on_quadric`` constructed points of the
    closed set, a handful of near misses, and random points for the rest."""
    rng = random.Random(seed)
    pts = [[Fraction(0)] * (n + 1)]
    pts += [_on_quadric(rng, n) for _ in range(on_quadric)]
    # off by one coordinate: leading entry nonzero, or quadric value nonzero
    for _ in range(max(0, min(25, count - len(pts)))):
        x = _on_quadric(rng, n)
        if rng.random() < 0.5:
            x[rng.randrange(n - 2)] = _rand_q(rng) or Fraction(1)
        else:
            x[n - 2] += 1
        pts.append(x)
    # the quadric degenerates along x_n = x_{n+1} = 0
    for _ in range(max(0, min(10, count - len(pts)))):
        x = [Fraction(0)] * (n + 1)
        x[n - 2] = _rand_q(rng)
        pts.append(x)
    while len(pts) < count:
        x = [_rand_q(rng) for _ in range(n + 1)]
        if rng.random() < 0.3:
            for i in range(n - 2):
                x[i] = Fraction(0)
        pts.append(x)
    return pts


@dataclass
class SliceReport:
    n: int
    samples: int
    on_quadric: int
    members: int
    mismatches: list[list[Fraction]] = field(default_factory=list)
    single_mismatches: list[list[Fraction]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.single_mismatches

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "samples": self.samples,
            "on_quadric": self.on_quadric,
            "members": self.members,
            "ok": self.ok,
            "mismatches": [[str(v) for v in x] for x in self.mismatches],
            "single_condition_mismatches": [[str(v) for v in x] for x in self.single_mismatches],
        }


def verify_slice(n: int, samples: int = 500, seed: int = 0, *, on_quadric: int = 50) -> SliceReport:
    """Compare the Schubert rank conditions with the closed description
    on seeded sample points, and the single condition with the full set."""
    pts = sample_points(n, samples, seed, on_quadric=on_quadric)
    rep = SliceReport(n, len(pts), on_quadric, 0)
    for x in pts:
        full = slice_membership(n, x)
        rep.members += full
        if full != closed_condition(n, x):
            rep.mismatches.append(x)
        if slice_membership(n, x, single=True) != full:
            rep.single_mismatches.append(x)
    return rep
