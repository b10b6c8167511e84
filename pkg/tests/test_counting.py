from itertools import product
from math import comb, factorial

import pytest

from morseconfig.counting import (census, compositions, count_balls, count_balls_closed, m_r,
                                  m_values, predicted_multiplicity, total_edges_formula,
                                  vandermonde_selfcheck)
from morseconfig.tree import parse_plane_tree

from conftest import H, STAR4, STAR5, Y


def test_m_r():
    assert m_r(parse_plane_tree(Y), 2) == 1
    assert m_r(parse_plane_tree(STAR5), 3) == 4
    assert m_r(parse_plane_tree(STAR5), 5) == 0
    assert m_r(parse_plane_tree(H), 2) == 2


def test_ball_example():
    assert count_balls(4, 6, 3) == 4 == comb(4, 1)
    assert sum(1 for _ in compositions(6, 3)) == 10


@pytest.mark.parametrize("r", range(2, 9))
def test_forced_split(r):
    assert count_balls(1, r, 2) == 1


@pytest.mark.parametrize("r,s", [(6, 3), (7, 4), (8, 2), (9, 5)])
def test_independent_of_f(r, s):
    assert len({count_balls(f, r, s) for f in range(1, r)}) == 1


def test_compositions_against_product():
    for r in range(1, 8):
        for s in range(1, r + 1):
            brute = [c for c in product(range(1, r + 1), repeat=s) if sum(c) == r]
            assert sorted(compositions(r, s)) == sorted(brute)
            assert len(brute) == comb(r - 1, s - 1)


def test_ball_precondition():
    with pytest.raises(ValueError):
        count_balls(0, 5, 2)
    with pytest.raises(ValueError):
        count_balls_closed(3, 3, 2)


def test_selfcheck():
    assert vandermonde_selfcheck(10)


def test_census_degree_three_four_particles():
    t = parse_plane_tree(Y)
    c = census(t, 4)
    assert [(r.i, r.j, r.multiplicity, r.cycles_per_orbit) for r in c.rows] == [
        (2, 2, 1, 12), (3, 2, 1, 12), (3, 3, 1, 8), (4, 2, 1, 12), (4, 3, 1, 8), (4, 4, 1, 6)]


def test_census_two_particles_single_row():
    t = parse_plane_tree(STAR4)
    c = census(t, 2)
    assert len(c.rows) == 1
    assert (c.rows[0].i, c.rows[0].j, c.rows[0].multiplicity) == (2, 2, 3)
    assert c.total_edges == 6


def test_census_total_matches_formula():
    for text in (Y, H, STAR4, STAR5):
        t = parse_plane_tree(text)
        for n in range(2, 7):
            assert census(t, n).total_edges == total_edges_formula(n, m_values(t, n))


def test_radial_totals():
    # single vertex of degree d: n! * sum_i (i-1) sum_l C(i-2, l-2) C(d-1, l)
    for d in (3, 4, 5):
        nested = [[[] for _ in range(d - 1)]]
        from morseconfig.tree import PlaneTree
        t = PlaneTree.from_nested(nested)
        for n in (2, 3, 4):
            expect = factorial(n) * sum(
                (i - 1) * comb(i - 2, l - 2) * comb(d - 1, l)
                for i in range(2, n + 1) for l in range(2, i + 1))
            assert census(t, n).total_edges == expect


def test_predicted_multiplicity_level_sum():
    t = parse_plane_tree(STAR5)
    m = m_values(t, 5)
    assert predicted_multiplicity(5, 3, t) == sum(comb(3, l - 2) * m[l] for l in range(2, 6))


def test_census_json():
    obj = census(parse_plane_tree(Y), 3).to_json()
    assert obj["total_edges"] == 18
    assert len(obj["rows"]) == 3
