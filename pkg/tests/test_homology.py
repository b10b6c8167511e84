import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors as sympy_factors

from morseconfig import snf
from morseconfig.cells import cell_counts
from morseconfig.homology import BudgetExceeded, boundary_matrices, homology
from morseconfig.invariants import euler_from_critical
from morseconfig.tree import parse_plane_tree

from conftest import H, STAR4, Y, tree_for


def columns(rows):
    n_cols = len(rows[0]) if rows else 0
    return [{r: row[c] for r, row in enumerate(rows) if row[c]} for c in range(n_cols)]


def reference(rows):
    facs = sympy_factors(Matrix(rows), domain=ZZ)
    return sorted(abs(int(f)) for f in facs if f != 0)


matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_invariant_factors_match_sympy(rows):
    cols = columns(rows)
    ours = sorted(snf.invariant_factors(cols))
    assert ours == reference(rows)
    assert snf.rank(cols) == len(ours)


def test_known_torsion():
    rows = [[2, 0], [0, 6]]
    assert snf.invariant_factors(columns(rows)) == [2, 6]
    assert snf.invariant_factors(columns([[2, 4], [6, 8]])) == [2, 4]


def test_rank_large_sparse():
    rng = random.Random(3)
    rows = [[rng.choice([0, 0, 0, 1, -1]) for _ in range(30)] for _ in range(25)]
    assert snf.rank(columns(rows)) == Matrix(rows).rank()


def test_y_two_circle():
    h = homology(parse_plane_tree(Y), 2)
    assert h.betti[0] == 1 and h.betti[1] == 1
    assert h.cell_counts == cell_counts(parse_plane_tree(Y), 2)


def test_y_three():
    h = homology(tree_for(Y, 3), 3, torsion=True)
    assert h.betti == {0: 1, 1: 13, 2: 0, 3: 0}
    assert h.torsion_free


def test_single_particle_is_incidence_matrix():
    t = parse_plane_tree(H)
    mats = boundary_matrices(t, 1)
    dense = mats.dense(1)
    for c, ((u, w),) in enumerate(mats.cells[1]):
        col = {mats.cells[0][r][0]: dense[r][c] for r in range(len(dense)) if dense[r][c]}
        assert col == {u: -1, w: 1}
    assert homology(t, 1).betti == {0: 1, 1: 0}


@pytest.mark.parametrize("text,m2", [(Y, 1), (H, 2), (STAR4, 3)])
def test_two_particles_betti(text, m2):
    h = homology(tree_for(text, 2), 2)
    assert (h.betti[0], h.betti[1]) == (1, 2 * m2 - 1)


@pytest.mark.parametrize("text,n", [(Y, 2), (Y, 3), (H, 3), (STAR4, 3), (Y, 4)])
def test_euler_matches_critical(text, n):
    t = tree_for(text, n)
    h = homology(t, n, torsion=True)
    assert h.euler == euler_from_critical(t, n)
    assert h.euler == sum((-1) ** p * b for p, b in h.betti.items())
    assert h.torsion_free
    assert h.betti[0] == 1


def test_budget_refusal():
    with pytest.raises(BudgetExceeded) as info:
        homology(tree_for(Y, 3), 3, budget=50)
    assert info.value.budget == 50
