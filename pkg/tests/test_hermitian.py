from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hwcc import fixtures
from hwcc.clans import all_clans, geometric_cell
from hwcc.hermitian import (
    av_rank,
    build_hermitian,
    mu_rank,
    n_cap_nw,
    so_rank,
    strongly_orthogonal,
    typeb_param,
)
from hwcc.rootsys import build, pairing
from hwcc.typeb import build_wk
from hwcc.weyl import identity, long_element
from oracles import strongly_orthogonal_weight_brute


@pytest.mark.parametrize(
    "args,kw,rank",
    [(("B", 4), {}, 2), (("B", 7), {}, 2), (("E6",), {}, 2), (("E7",), {}, 3),
     (("C", 5), {}, 5), (("A", 5), {"p": 2}, 2), (("D", 6), {}, 2),
     (("D", 6), {"real_form": "sostar"}, 3), (("D", 7), {"real_form": "sostar"}, 3)],
    ids=str,
)
def test_real_rank(args, kw, rank):
    assert build_hermitian(*args, **kw).real_rank == rank


def test_p_plus_is_abelian_and_compact_part_splits():
    for hd in (build_hermitian("E7"), build_hermitian("C", 4), build_hermitian("B", 5)):
        roots = set(hd.rs.roots)
        pp = set(hd.p_plus)
        for a in pp:
            for b in pp:
                s = tuple(x + y for x, y in zip(a, b))
                assert s not in roots
        assert len(pp) + len(hd.compact_positive) == len(hd.rs.positive_roots)
        assert len(hd.cascade) == hd.real_rank
        assert all(strongly_orthogonal(hd.rs, a, b) for a in hd.cascade for b in hd.cascade if a != b)


def test_sizes_of_p_plus():
    assert len(build_hermitian("E6").p_plus) == 16
    assert len(build_hermitian("E7").p_plus) == 27
    assert len(build_hermitian("C", 4).p_plus) == 10
    assert len(build_hermitian("B", 5).p_plus) == 9


def test_bad_requests():
    with pytest.raises(ValueError):
        build_hermitian("F4")
    with pytest.raises(ValueError):
        build_hermitian("B")
    with pytest.raises(ValueError):
        build_hermitian("A", 3, p=5)
    with pytest.raises(ValueError):
        build_hermitian("D", 5, real_form="so3")
    with pytest.raises(ValueError):
        build_hermitian("B", 3, p=1)


def test_n_cap_nw_examples():
    hd = build_hermitian("B", 5)
    assert n_cap_nw(hd, identity(hd.rs)) == frozenset(hd.rs.positive_roots)
    assert n_cap_nw(hd, long_element(hd.rs)) == frozenset()
    w = build_wk(5, 2, "+")
    e = lambda *c: tuple(c)  # noqa: E731
    assert n_cap_nw(hd, w) == {e(1, -1, 0, 0, 0), e(1, 0, -1, 0, 0), e(1, 0, 0, -1, 0)}
    assert n_cap_nw(hd, build_wk(5, 5, "+")) == frozenset()


def test_mu_rank_examples(e6):
    b = build_hermitian("B", 6)
    for k in range(1, 6):
        assert mu_rank(b, build_wk(6, k, "+")) == 1
        assert mu_rank(b, build_wk(6, k, "-")) == 2
    assert mu_rank(b, build_wk(6, 6, "+")) == 0
    assert mu_rank(e6, e6.script_w[20]) == 1
    with pytest.raises(ValueError):
        mu_rank(e6, identity(e6.rs))


def test_cross_check_agrees(e6, e7):
    for hd in (e6, e7, build_hermitian("B", 5)):
        for w in hd.script_w:
            mu_rank(hd, w, cross_check=True)


def test_typeb_param_round_trip():
    for n in range(2, 8):
        hd = build_hermitian("B", n)
        for k in range(1, n + 1):
            for s in "+-":
                assert typeb_param(hd, build_wk(n, k, s)) == (k, s)


def test_av_rank():
    b = build_hermitian("B", 4)
    assert av_rank(b, long_element(b.rs)) == 0
    assert all(av_rank(b, w) == 2 for w in b.script_w if w != long_element(b.rs))
    with pytest.raises(ValueError):
        av_rank(build_hermitian("C", 3), build_hermitian("C", 3).script_w[0])
    e7 = build_hermitian("E7")
    assert [av_rank(e7, w) for w in e7.script_w] == [r[3] for r in fixtures.DATA["E7"]]


# frozen from exhaustive computation
CLASSICAL_RANKS = {
    ("A", 4, 2): {2: 5, 1: 4, 0: 1},
    ("D", 5, "so2"): {1: 5, 2: 4, 0: 1},
    ("D", 6, "sostar"): {2: 15, 3: 10, 1: 6, 0: 1},
    ("D", 5, "sostar"): {2: 10, 1: 5, 0: 1},
}


@pytest.mark.parametrize("key", list(CLASSICAL_RANKS), ids=str)
def test_classical_rank_distributions(key):
    t, n, extra = key
    hd = build_hermitian(t, n, p=extra) if t == "A" else build_hermitian(t, n, real_form=extra)
    assert Counter(mu_rank(hd, w) for w in hd.script_w) == CLASSICAL_RANKS[key]


@pytest.mark.parametrize("n", range(1, 7))
def test_type_c_distribution_matches_clan_cells(n):
    hd = build_hermitian("C", n)
    assert Counter(mu_rank(hd, w) for w in hd.script_w) == Counter(geometric_cell(c) for c in all_clans(n))


def test_so_rank_long_and_short():
    hd = build_hermitian("B", 4)
    short = (1, 0, 0, 0)
    assert so_rank(hd, [short]) == 2
    assert so_rank(hd, [(1, -1, 0, 0)]) == 1
    assert so_rank(hd, []) == 0


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_so_rank_against_brute_force(data):
    t, n = data.draw(st.sampled_from([("C", 3), ("C", 4), ("B", 3), ("B", 4), ("D", 5), ("A", 4)]))
    hd = build_hermitian(t, n, real_form="sostar") if t == "D" else build_hermitian(t, n, p=2) if t == "A" \
        else build_hermitian(t, n)
    roots = data.draw(st.sets(st.sampled_from(hd.p_plus), max_size=7))
    assert so_rank(hd, roots) == min(hd.real_rank, strongly_orthogonal_weight_brute(hd.rs, roots))


def test_strongly_orthogonal_definition():
    rs = build("B", 3)
    a, b = (1, 0, 0), (0, 1, 0)
    # orthogonal short roots whose sum is a root are not strongly orthogonal
    assert pairing(a, b) == 0 and not strongly_orthogonal(rs, a, b)
    assert strongly_orthogonal(rs, (1, -1, 0), (1, 1, 0))
    assert strongly_orthogonal(rs, (1, 0, -1), (0, 1, 0))
    assert not strongly_orthogonal(rs, (1, -1, 0), (0, 1, -1))
