"""Root system construction: invariants for every type and pinned examples."""

import math

import pytest

from alcoves.rootsystem import (
    RootSystem,
    build_root_system,
    exponents_from_heights,
    parse_type,
    poset_less,
    root_add,
)

# series, rank, number of positive roots, Coxeter number, |W|
CLASSICAL_DATA = [
    ("A", 1, 1, 2, 2),
    ("A", 2, 3, 3, 6),
    ("A", 3, 6, 4, 24),
    ("A", 4, 10, 5, 120),
    ("A", 5, 15, 6, 720),
    ("B", 2, 4, 4, 8),
    ("B", 3, 9, 6, 48),
    ("B", 4, 16, 8, 384),
    ("C", 3, 9, 6, 48),
    ("C", 4, 16, 8, 384),
    ("D", 4, 12, 6, 192),
    ("D", 5, 20, 8, 1920),
    ("E", 6, 36, 12, 51840),
    ("E", 7, 63, 18, 2903040),
    ("E", 8, 120, 30, 696729600),
    ("F", 4, 24, 12, 1152),
    ("G", 2, 6, 6, 12),
]

EXPONENTS = {
    "A3": (1, 2, 3),
    "B3": (1, 3, 5),
    "C4": (1, 3, 5, 7),
    "D4": (1, 3, 3, 5),
    "E6": (1, 4, 5, 7, 8, 11),
    "E7": (1, 5, 7, 9, 11, 13, 17),
    "E8": (1, 7, 11, 13, 17, 19, 23, 29),
    "F4": (1, 5, 7, 11),
    "G2": (1, 5),
}


@pytest.mark.parametrize("series,rank,npos,h,worder", CLASSICAL_DATA)
def test_global_invariants(series, rank, npos, h, worder):
    rs = build_root_system(series, rank)
    assert rs.n_pos == npos
    assert rs.h == h
    assert rs.weyl_order == worder
    # |Phi+| = n h / 2
    assert 2 * npos == rank * h
    assert len(rs.exponents) == rank
    assert sum(rs.exponents) == npos
    assert math.prod(m + 1 for m in rs.exponents) == worder
    # exponents are symmetric about h/2
    assert tuple(sorted(h - m for m in rs.exponents)) == rs.exponents
    assert rs.exponents == exponents_from_heights(rs)
    # highest root is the unique root of maximal height
    assert rs.heights[-1] == h - 1
    assert rs.heights.count(h - 1) == 1


@pytest.mark.parametrize("name,exps", sorted(EXPONENTS.items()))
def test_exponents(name, exps):
    assert RootSystem.from_string(name).exponents == exps


def test_parse_type():
    assert parse_type("A2") == ("A", 2)
    assert parse_type("E8") == ("E", 8)
    for bad in ("Z9", "A0", "B1", "E5", "F3", "G3", "H3", "", "A"):
        with pytest.raises(ValueError):
            parse_type(bad)
        with pytest.raises(ValueError):
            RootSystem.from_string(bad)


def test_cartan_pinned_entries():
    b2 = RootSystem.from_string("B2")
    # <alpha_1, alpha_2 coroot> = -2 with alpha_1 long
    assert b2.cartan[1][0] == -2
    assert b2.root_norm(b2.simple_root(1)) > b2.root_norm(b2.simple_root(2))
    g2 = RootSystem.from_string("G2")
    assert sorted((g2.cartan[0][1], g2.cartan[1][0])) == [-3, -1]
    f4 = RootSystem.from_string("F4")
    assert f4.theta == (2, 3, 4, 2)


def test_theta_values():
    assert RootSystem.from_string("A3").theta == (1, 1, 1)
    assert RootSystem.from_string("B3").theta == (1, 2, 2)
    assert RootSystem.from_string("C3").theta == (2, 2, 1)
    assert RootSystem.from_string("D4").theta == (1, 2, 1, 1)  # node 2 is the center
    assert RootSystem.from_string("G2").theta == (3, 2)
    assert RootSystem.from_string("E8").theta == (2, 3, 4, 6, 5, 4, 3, 2)


def test_theta_coefficient_divisibility_exceptions():
    # the coefficients of theta divide h in every type except E7 and E8
    for name in ("A4", "B4", "C4", "D5", "E6", "F4", "G2"):
        rs = RootSystem.from_string(name)
        assert all(rs.h % c == 0 for c in rs.theta_coeffs)
    e7 = RootSystem.from_string("E7")
    assert any(e7.h % c != 0 for c in e7.theta_coeffs)  # the coefficient 4, h = 18
    e8 = RootSystem.from_string("E8")
    assert any(e8.h % c != 0 for c in e8.theta_coeffs)  # the coefficient 4, h = 30


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "G2", "F4"])
def test_root_closure_and_negatives(name):
    rs = RootSystem.from_string(name)
    roots = set(rs.all_roots)
    assert len(roots) == 2 * rs.n_pos
    for r in rs.pos_roots:
        assert tuple(-c for c in r) in roots
    # sum of two roots is either a root or not a vector in the set, never half of one
    for a in rs.pos_roots:
        for b in rs.pos_roots:
            s = tuple(x + y for x, y in zip(a, b))
            assert (root_add(rs, a, b) is not None) == (s in roots)


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "G2", "F4"])
def test_coroots_integral_and_symmetric(name):
    rs = RootSystem.from_string(name)
    for a in rs.all_roots:
        cr = rs.coroot(a)
        assert all(isinstance(c, int) for c in cr)
        assert rs.pairing(a, cr) == 2
    # pairing of a root with a simple coroot matches the Cartan matrix
    for i in range(1, rs.rank + 1):
        for j in range(1, rs.rank + 1):
            e_i = tuple(1 if k == i - 1 else 0 for k in range(rs.rank))
            assert rs.pairing(rs.simple_root(j), e_i) == rs.cartan[i - 1][j - 1]


def test_poset_order():
    rs = RootSystem.from_string("B2")
    a1, a2 = rs.simple_root(1), rs.simple_root(2)
    assert poset_less(rs, a2, rs.theta)
    assert not poset_less(rs, a1, a2)
    # canonical order is by ascending height
    assert rs.heights == sorted(rs.heights)
    assert set(rs.pos_roots[: rs.rank]) == {a1, a2}


def test_roots_of_height():
    rs = RootSystem.from_string("G2")
    assert len(rs.roots_of_height(1)) == 2
    assert rs.roots_of_height(5) == [rs.theta]
    assert rs.roots_of_height(-5) == [tuple(-c for c in rs.theta)]
    assert rs.roots_of_height(4) == [(3, 1)]


def test_json_roundtrip():
    rs = RootSystem.from_string("B3")
    data = rs.to_json()
    assert data["h"] == 6
    assert data["weyl_order"] == 48
    assert len(data["positive_roots"]) == 9
    assert data["theta"] == [1, 2, 2]
