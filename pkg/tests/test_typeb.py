from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hwcc.hermitian import build_hermitian
from hwcc.typeb import (
    ExtendedPermutation,
    all_params,
    build_wk,
    cc_so,
    closed_condition,
    embed,
    ltc_so,
    n_pq,
    param_of,
    quadric,
    sample_points,
    slice_matrix,
    slice_membership,
    verify_lemma_b1,
    verify_slice,
    verify_t_lemma,
)
from hwcc.weyl import bruhat_leq, from_word, long_element


@pytest.mark.parametrize("n", range(2, 9))
def test_lemmas(n):
    a, b = verify_lemma_b1(n), verify_t_lemma(n)
    assert a.ok, a.mismatches
    assert b.ok, b.mismatches
    assert a.checks > 0 and (n == 2 or b.checks > 0)


def test_w_n_plus_is_long_element():
    for n in range(2, 7):
        hd = build_hermitian("B", n)
        assert build_wk(n, n, "+") == long_element(hd.rs)
        assert param_of(n, build_wk(n, 1, "-")) == (1, "-")


def test_chain_in_bruhat_order():
    # lengths go up by one along w_n^- < ... < w_1^- < w_1^+ < ... < w_n^+
    n = 6
    chain = [build_wk(n, k, "-") for k in range(n, 0, -1)] + [build_wk(n, k, "+") for k in range(1, n + 1)]
    assert [w.length for w in chain] == list(range(chain[0].length, chain[0].length + 2 * n))
    for y, w in zip(chain, chain[1:]):
        assert bruhat_leq(y, w)


def test_bad_parameters():
    with pytest.raises(ValueError):
        build_wk(1, 1, "+")
    with pytest.raises(ValueError):
        build_wk(4, 5, "+")
    with pytest.raises(ValueError):
        build_wk(4, 1, "x")


@pytest.mark.parametrize("n", [3, 6])
def test_cycles(n):
    for k, s in all_params(n):
        terms = cc_so(n, k, s)
        if s == "+" and k < n:
            assert terms == [((k, "+"), 1), ((k + 1, "-"), 1)]
            assert ltc_so(n, k, s) == [((k + 1, "-"), 1)]
        else:
            assert terms == ltc_so(n, k, s) == [((k, s), 1)]


def test_extended_permutations():
    with pytest.raises(ValueError):
        ExtendedPermutation((2, 1, 3))
    with pytest.raises(ValueError):
        ExtendedPermutation((1, 2))
    rs = build_hermitian("B", 4).rs
    for word in ([1], [4], [1, 2, 3, 4, 3], [4, 3, 4]):
        w = from_word(rs, word)
        u = from_word(rs, word[::-1])
        assert embed(w * u) == embed(w) * embed(u)
        e = embed(w)
        assert e(5) == 5
    w1 = embed(build_wk(4, 1, "+"))
    assert n_pq(w1, 9, 9) == 9 and n_pq(w1, 0, 3) == 0


def test_slice_examples():
    n = 5
    zero = [Fraction(0)] * (n + 1)
    assert slice_membership(n, zero)
    x = list(zero)
    x[0] = Fraction(1)
    assert not slice_membership(n, x)
    assert not closed_condition(n, x)
    with pytest.raises(ValueError):
        slice_matrix(n, zero[:-1])
    with pytest.raises(ValueError):
        slice_membership(2, [0, 0, 0])


def test_slice_matrix_preserves_the_form():
    n = 4
    size = 2 * n + 1
    J = [[int(i + j == size - 1) for j in range(size)] for i in range(size)]
    for x in sample_points(n, 15, seed=3, on_quadric=5):
        m = slice_matrix(n, x)
        mt_j_m = [[sum(m[k][i] * J[k][l] * m[l][j] for k in range(size) for l in range(size))
                   for j in range(size)] for i in range(size)]
        assert mt_j_m == J


def test_sample_points_are_deterministic():
    a = sample_points(4, 100, seed=9)
    assert a == sample_points(4, 100, seed=9)
    assert len(a) == 100
    assert sum(closed_condition(4, x) for x in a) >= 50


@pytest.mark.parametrize("n", [3, 4, 5])
def test_slice_report(n):
    rep = verify_slice(n, samples=200, seed=11)
    assert rep.ok and rep.samples == 200 and rep.members >= 50


rational = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 5).flatmap(lambda n: st.tuples(st.just(n), st.lists(rational, min_size=n + 1, max_size=n + 1))))
def test_membership_equals_closed_condition(case):
    n, x = case
    assert slice_membership(n, x) == closed_condition(n, x)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 5).flatmap(lambda n: st.tuples(st.just(n), st.lists(rational, min_size=2, max_size=2))))
def test_constructed_cone_points_are_members(case):
    n, (a, b) = case
    b = b or Fraction(1)
    x = [Fraction(0)] * (n + 1)
    x[n - 1], x[n] = a, b
    x[n - 2] = -a * a / (2 * b)
    assert quadric(n, x) == 0
    assert slice_membership(n, x)
