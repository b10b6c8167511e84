"""Closed-form homotopy invariants of ordered configuration spaces of trees."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial

from .counting import m_r, m_values
from .gradient import count_critical
from .tree import PlaneTree

__all__ = ["m_r", "essential_count", "k_dimension", "ell", "is_y_graph",
           "InvariantReport", "tc_table", "wedge_circle_count", "euler_from_critical"]


def essential_count(tree: PlaneTree) -> int:
    return len(tree.essential_vertices)


def k_dimension(tree: PlaneTree, n: int) -> int:
    """Upper bound on the dimension of critical cells:
    ``min(floor((n + 1 - chi) / 2), #essential)``."""
    if n < 1:
        return 0
    return max(0, min((n + 1 - tree.euler_characteristic) // 2, essential_count(tree)))


def ell(tree: PlaneTree, n: int) -> int:
    return min(n // 2, essential_count(tree))


def is_y_graph(tree: PlaneTree) -> bool:
    """Homeomorphic to the Y-graph: one essential vertex, of degree 3."""
    ess = tree.essential_vertices
    return tree.is_tree and len(ess) == 1 and tree.degree(ess[0]) == 3


def _level_sum(m: dict[int, int], n: int) -> int:
    return sum((i - 1) * comb(i - 2, j - 2) * m.get(j, 0)
               for i in range(2, n + 1) for j in range(2, i + 1))


def wedge_circle_count(tree: PlaneTree, n: int) -> int | None:
    """Number of circles when the configuration space is a wedge of circles
    (n = 2, n = 3, or a radial tree), else ``None``."""
    if not tree.is_tree or not tree.essential_vertices or n < 2:
        return None
    if n == 2:
        return 2 * sum(comb(tree.degree(v) - 1, 2) for v in tree.essential_vertices) - 1
    if n == 3:
        s = sum(_level_sum({j: comb(tree.degree(v) - 1, j) for j in (2, 3)}, 3)
                for v in tree.essential_vertices)
        return 1 + 6 * (-1 + s)
    if essential_count(tree) == 1:
        d = tree.degree(tree.essential_vertices[0])
        m = {j: comb(d - 1, j) for j in range(2, n + 1)}
        return 1 + factorial(n) * (-1 + _level_sum(m, n))
    return None


def euler_from_critical(tree: PlaneTree, n: int, workers: int | None = None) -> int:
    counts = count_critical(tree, n, workers=workers)
    return sum((-1) ** p * c for p, c in counts.ordered.items())


@dataclass
class InvariantReport:
    n: int
    m_r: dict[int, int]
    essential_count: int
    k_n_G: int
    ell: int
    hdim: int
    cat: int
    tc: dict[int, int]
    betti1_predicted: int | None
    euler_from_critical: int | None = None
    basis: dict[str, str] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"n": self.n,
                "m_r": {str(k): v for k, v in self.m_r.items()},
                "essential_count": self.essential_count,
                "k_n_G": self.k_n_G, "ell": self.ell, "hdim": self.hdim,
                "cat": self.cat, "tc": {str(k): v for k, v in self.tc.items()},
                "betti1_predicted": self.betti1_predicted,
                "euler_from_critical": self.euler_from_critical,
                "basis": self.basis}


def tc_table(tree: PlaneTree, n: int, s_max: int = 4, *,
             with_euler: bool = False) -> InvariantReport:
    """cat, hdim and TC_1..TC_{s_max}.

    ``tc[s] = s * ell`` except for the Y-graph with two particles, whose
    configuration space is a circle (``tc[s] = s - 1``).  ``tc[1]`` is cat.
    """
    m = essential_count(tree)
    if m == 0:
        raise ValueError("tree has no essential vertex; its configuration "
                         "spaces are not covered")
    if n < 2:
        raise ValueError("n must be at least 2")
    if not tree.is_tree:
        raise ValueError("invariants are evaluated for trees only")
    l = ell(tree, n)
    circle = n == 2 and is_y_graph(tree)
    tc = {1: l}
    for s in range(2, s_max + 1):
        tc[s] = s - 1 if circle else s * l
    wedge = wedge_circle_count(tree, n)
    if circle:
        why = "circle"
    elif wedge is not None:
        why = f"wedge of {wedge} circles"
    else:
        why = "zero-divisor cup-length lower bound meets s*cat upper bound"
    basis = {"cat": "cup-length = cat = hdim = min(floor(n/2), m)", "tc": why}
    return InvariantReport(
        n=n, m_r=m_values(tree, n), essential_count=m,
        k_n_G=k_dimension(tree, n), ell=l, hdim=l, cat=l, tc=tc,
        betti1_predicted=wedge,
        euler_from_critical=euler_from_critical(tree, n) if with_euler else None,
        basis=basis)
