import itertools
import warnings
from math import factorial

import pytest

from morseconfig.cells import (act, cell_counts, cell_from_json, cell_to_json, closure, dim,
                               enumerate_cells, faces, is_cell, orbit, orbit_representatives,
                               to_unordered)
from morseconfig.homology import boundary_matrices
from morseconfig.tree import PlaneTree, parse_plane_tree

from conftest import H, STAR4, Y, tree_for


def brute_cells(tree, n, d):
    """Filter the full n-fold product of cells by pairwise disjoint closures."""
    entries = list(range(tree.n_vertices)) + list(tree.edges)
    out = set()
    for combo in itertools.product(entries, repeat=n):
        if sum(1 for x in combo if not isinstance(x, int)) != d:
            continue
        cl = [set(closure(x)) for x in combo]
        if all(cl[a].isdisjoint(cl[b]) for a in range(n) for b in range(a + 1, n)):
            out.add(combo)
    return out


def test_y_two_particles():
    t = parse_plane_tree(Y)
    assert len(list(enumerate_cells(t, 2, 0))) == 12
    assert list(enumerate_cells(t, 2, 2)) == []


def test_single_edge_two_particles():
    t = PlaneTree.from_nested([[]])
    assert sorted(enumerate_cells(t, 2, 0, check_subdivision=False)) == [(0, 1), (1, 0)]


def test_more_particles_than_vertices_is_empty():
    t = PlaneTree.from_nested([[]])
    assert list(enumerate_cells(t, 3, 0, check_subdivision=False)) == []


@pytest.mark.parametrize("text,n", [(Y, 2), (Y, 3), (H, 2), (STAR4, 2), (STAR4, 3)])
def test_enumeration_matches_product_filter(text, n):
    t = parse_plane_tree(text)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for d in range(n + 1):
            got = list(enumerate_cells(t, n, d))
            assert len(got) == len(set(got))
            assert set(got) == brute_cells(t, n, d)
            assert all(is_cell(t, c) and dim(c) == d for c in got)


def test_enumeration_is_deterministic_and_sorted():
    t = tree_for(Y, 3)
    a = list(enumerate_cells(t, 3, 1))
    assert a == list(enumerate_cells(t, 3, 1))


def test_warns_when_not_subdivided():
    with pytest.warns(UserWarning):
        list(enumerate_cells(parse_plane_tree(Y), 3, 0))


def test_faces_example():
    fs = faces(((0, 1), 3))
    assert sorted(fs) == [((0, 3), -1), ((1, 3), 1)]


def test_faces_rejects_zero_cell():
    with pytest.raises(ValueError):
        faces((0, 1))


def test_faces_of_square():
    fs = faces(((0, 1), (2, 3), 5))
    assert len(fs) == 4
    assert dict(fs) == {(0, (2, 3), 5): -1, (1, (2, 3), 5): 1,
                        ((0, 1), 2, 5): 1, ((0, 1), 3, 5): -1}


@pytest.mark.parametrize("text,n", [(Y, 3), (H, 3), (STAR4, 3), (Y, 4)])
def test_dd_zero(text, n):
    mats = boundary_matrices(tree_for(text, n), n)
    assert mats.check_dd_zero()


def test_to_unordered():
    assert to_unordered((3, 1)) == (1, 3)
    assert to_unordered(((4, 5), 2, (0, 1))) == (2, (0, 1), (4, 5))


@pytest.mark.parametrize("text,n", [(Y, 2), (Y, 3), (H, 3), (STAR4, 4)])
def test_ordered_is_n_factorial_times_unordered(text, n):
    t = tree_for(text, n)
    o = cell_counts(t, n)
    u = cell_counts(t, n, ordered=False)
    assert o == {d: factorial(n) * c for d, c in u.items()}


def test_orbit_representatives_unique():
    t = tree_for(Y, 3)
    reps = list(orbit_representatives(t, 3, 1))
    assert len(reps) == len(set(reps))
    assert all(to_unordered(r) == r for r in reps)


def test_act():
    assert act((0, 1, 2), (0, 1, 2)) == (0, 1, 2)
    assert act((0, 1, 2), (1, 0, 2)) == (1, 0, 2)
    c = (7, (0, 1), 4)
    s, t = (2, 0, 1), (1, 0, 2)
    from morseconfig.perms import compose
    assert act(act(c, s), t) == act(c, compose(s, t))


def test_orbit_is_free():
    c = ((0, 1), 3, 5)
    assert len(set(orbit(c))) == factorial(3)


def test_json_roundtrip():
    c = (3, (0, 1), 7)
    obj = cell_to_json(c)
    assert obj == {"entries": [{"v": 3}, {"e": [0, 1]}, {"v": 7}]}
    assert cell_from_json(obj) == c
