import pytest
from hypothesis import strategies as st

from morseconfig.tree import PlaneTree, parse_plane_tree, subdivide_for

Y = "((()()))"
H = "((()(()())))"           # two essential vertices of degree 3
STAR4 = "((()()()))"         # one essential vertex of degree 4
STAR5 = "((()()()()))"       # one essential vertex of degree 5
TRIPLE = "(((()())(()())))"  # three essential vertices of degree 3


def tree_for(text: str, n: int) -> PlaneTree:
    t = parse_plane_tree(text)
    return subdivide_for(t, n) if n >= 2 else t


@pytest.fixture
def y_tree():
    return parse_plane_tree(Y)


@pytest.fixture
def y3():
    return tree_for(Y, 3)


# nested child lists; wrapped under a pendant root to make a plane tree
nested_trees = st.recursive(st.just([]), lambda kids: st.lists(kids, min_size=1, max_size=3),
                            max_leaves=5)
plane_trees = nested_trees.map(lambda t: PlaneTree.from_nested([t]))
