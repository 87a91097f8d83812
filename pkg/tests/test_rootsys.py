from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hwcc.rootsys import build, coroot_pairing, pairing, reflect, scale, vec
from oracles import explicit_positive_roots

CASES = [("A", n) for n in range(1, 7)] + [("B", n) for n in range(2, 7)] \
    + [("C", n) for n in range(1, 7)] + [("D", n) for n in range(3, 7)] + [("E6", None), ("E7", None)]

COUNTS = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n, "C": lambda n: n * n,
          "D": lambda n: n * (n - 1)}


@pytest.mark.parametrize("t,n", CASES)
def test_positive_root_count(t, n):
    rs = build(t, n)
    expected = {"E6": 36, "E7": 63}.get(t) or COUNTS[t](n)
    assert len(rs.positive_roots) == expected


@pytest.mark.parametrize("t,n", [c for c in CASES if c[0] in "ABCD"])
def test_matches_textbook_root_lists(t, n):
    rs = build(t, n)
    assert set(rs.positive_roots) == {tuple(x) for x in explicit_positive_roots(t, n)}


@pytest.mark.parametrize("t,n", CASES)
def test_closed_under_reflection_and_rho(t, n):
    rs = build(t, n)
    roots = set(rs.roots)
    for a in rs.simple_roots:
        assert coroot_pairing(rs.rho, a) == 1
        for b in roots:
            assert reflect(b, a) in roots
    half = tuple(sum((b[k] for b in rs.positive_roots), Fraction(0)) / 2 for k in range(rs.dim))
    assert half == rs.rho
    for b in rs.positive_roots:
        assert all(c >= 0 for c in rs.coefficients[b])
        assert pairing(rs.rho, b) > 0


def test_type_b_simple_roots():
    rs = build("B", 4)
    assert rs.simple_roots == (vec(1, -1, 0, 0), vec(0, 1, -1, 0), vec(0, 0, 1, -1), vec(0, 0, 0, 1))
    assert pairing(rs.simple(1), rs.simple(2)) == -1


def test_e_series_lengths_and_diagram():
    for t, pairs in [("E6", [(1, 3), (2, 4), (3, 4), (4, 5), (5, 6)]),
                     ("E7", [(1, 3), (2, 4), (3, 4), (4, 5), (5, 6), (6, 7)])]:
        rs = build(t)
        assert all(pairing(b, b) == 2 for b in rs.roots)
        assert rs.adjacent_pairs() == pairs


def test_highest_root_of_e7_has_height_17():
    rs = build("E7")
    assert max(rs.height(b) for b in rs.positive_roots) == 17
    assert rs.cartan_matrix()[0][2] == -1


def test_bad_input():
    with pytest.raises(ValueError):
        build("B", 1)
    with pytest.raises(ValueError):
        build("E", 8)
    with pytest.raises(ValueError):
        build("F", 4)
    with pytest.raises(ValueError):
        build("E6", 7)
    with pytest.raises(ValueError):
        pairing(vec(1, 0), vec(1, 0, 0))
    with pytest.raises(ValueError):
        reflect(vec(1, 0), vec(0, 0))


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@settings(max_examples=60, deadline=None)
@given(st.lists(rationals, min_size=8, max_size=8), st.integers(0, 62))
def test_reflection_is_an_isometric_involution(v, k):
    rs = build("E7")
    a = rs.positive_roots[k]
    v = tuple(v)
    r = reflect(v, a)
    assert reflect(r, a) == v
    assert pairing(r, r) == pairing(v, v)
    assert reflect(a, a) == scale(-1, a)
