"""Discrete Morse theory for ordered configuration spaces of trees."""

from .cells import act, enumerate_cells, faces, orbit_representatives, to_unordered
from .counting import census, count_balls, count_balls_closed, m_r, vandermonde_selfcheck
from .gradient import (
    CellClass, GradientField, Kind, build_field, check_acyclic, classify,
    count_critical, inductive_field, is_blocked, is_order_respecting, principal_reduction,
)
from .homology import boundary_matrices, homology, smith_betti
from .invariants import euler_from_critical, k_dimension, tc_table, wedge_circle_count
from .morse_graph import (
    MorseEdge, MorseGraph, build_morse_graph, gradient_terminal, sublevel_of, verify_structure,
)
from .tree import (PlaneTree, is_sufficiently_subdivided, parse_plane_tree, random_plane_tree,
                   subdivide_for)

__version__ = "0.1.0"
