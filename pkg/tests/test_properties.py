"""Property tests over random small plane trees."""

from math import factorial

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

import propcheck
from conftest import plane_trees
from morseconfig.cells import cell_counts, to_unordered
from morseconfig.gradient import (build_field, check_acyclic, count_critical, inductive_field,
                                  unordered_principal_reduction)
from morseconfig.homology import homology
from morseconfig.invariants import ell, euler_from_critical, k_dimension, wedge_circle_count
from morseconfig.morse_graph import build_morse_graph, verify_structure
from morseconfig.tree import (PlaneTree, is_sufficiently_subdivided, parse_plane_tree,
                              subdivide_for)

FAST = settings(max_examples=25, deadline=None,
                suppress_health_check=[HealthCheck.too_slow])

instances = st.tuples(plane_trees, st.sampled_from([2, 3])).map(
    lambda tn: (subdivide_for(tn[0], tn[1]), tn[1]))


def small(tree, n, limit=20000):
    return sum(cell_counts(tree, n).values()) <= limit


@FAST
@given(instances)
def test_exhaustive_properties(inst):
    tree, n = inst
    if small(tree, n):
        propcheck.run_all(tree, n)


@FAST
@given(instances)
def test_inductive_equals_direct(inst):
    tree, n = inst
    if small(tree, n):
        assert inductive_field(tree, n, n).pairs == build_field(tree, n, n).pairs


@FAST
@given(instances)
def test_quotient_field(inst):
    tree, n = inst
    if small(tree, n):
        for a, b in build_field(tree, n, n).pairs.items():
            assert unordered_principal_reduction(tree, to_unordered(a)) == to_unordered(b)


@FAST
@given(instances)
def test_acyclic(inst):
    tree, n = inst
    if small(tree, n):
        f = build_field(tree, n, n)
        for d in range(n):
            assert check_acyclic(f, d)[0]


@FAST
@given(instances)
def test_critical_counts(inst):
    tree, n = inst
    if not small(tree, n):
        return
    c = count_critical(tree, n)
    assert all(c.ordered[d] == factorial(n) * c.unordered[d] for d in c.ordered)
    assert c.max_dim() <= k_dimension(tree, n)
    assert c.ordered[0] == factorial(n)
    if tree.essential_vertices:
        assert c.max_dim() == ell(tree, n)


@FAST
@given(instances)
def test_morse_graph_structure(inst):
    tree, n = inst
    if not small(tree, n):
        return
    g = build_morse_graph(tree, n)
    rep = verify_structure(g, tree, n)
    assert rep.ok, [c.name for c in rep.failures()]
    w = wedge_circle_count(tree, n)
    if w is not None:
        assert g.betti1() == w


@settings(max_examples=15, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(instances)
def test_euler_and_betti_against_oracle(inst):
    tree, n = inst
    if not small(tree, n, 6000):
        return
    h = homology(tree, n)
    assert h.euler == euler_from_critical(tree, n)
    # a path has n! contractible components
    assert h.betti[0] == (1 if tree.essential_vertices else factorial(n))
    assert build_morse_graph(tree, n).betti1() == h.betti.get(1, 0)


@FAST
@given(plane_trees)
def test_vertex_order_matches_numbering(tree):
    for u in range(tree.n_vertices):
        for v in range(tree.n_vertices):
            if u != v:
                assert tree.vertex_less(u, v) == (u < v)


@FAST
@given(plane_trees, st.integers(2, 4))
def test_subdivision_idempotent(tree, n):
    s = subdivide_for(tree, n)
    assert is_sufficiently_subdivided(s, n)
    assert subdivide_for(s, n) == s
    assert len(s.essential_vertices) == len(tree.essential_vertices)


@FAST
@given(plane_trees)
def test_parens_roundtrip(tree):
    assert parse_plane_tree(tree.to_parens()) == tree
    assert PlaneTree.from_nested(tree.to_nested()) == tree


@FAST
@given(plane_trees, st.integers(2, 6), st.integers(2, 8))
def test_tc_formula(tree, n, s):
    from morseconfig.invariants import is_y_graph, tc_table
    if not tree.essential_vertices:
        return
    rep = tc_table(tree, n, s)
    l = min(n // 2, len(tree.essential_vertices))
    assert rep.cat == rep.hdim == l
    assert rep.tc[s] == (s - 1 if (n == 2 and is_y_graph(tree)) else s * l)
