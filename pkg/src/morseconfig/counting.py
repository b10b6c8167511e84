"""Closed-form counts for the Morse graph and their brute-force checks."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import comb, factorial
from typing import Iterator

from .tree import PlaneTree


def m_r(tree: PlaneTree, r: int) -> int:
    """Sum of C(d(v)-1, r) over vertices with d(v) > r."""
    if r < 1:
        raise ValueError("r must be positive")
    return sum(comb(tree.degree(v) - 1, r)
               for v in range(tree.n_vertices) if tree.degree(v) > r)


def level_multiplicity(i: int, m: dict[int, int]) -> int:
    """Repeated edges per endpoint pair in level ``i``: sum_l C(i-2, l-2) m_l."""
    return sum(comb(i - 2, l - 2) * m.get(l, 0) for l in range(2, i + 1))


def predicted_multiplicity(i: int, j: int, tree: PlaneTree) -> int:
    if not 2 <= j <= i:
        raise ValueError(f"need 2 <= j <= i, got i={i}, j={j}")
    return level_multiplicity(i, m_values(tree, i))


def m_values(tree: PlaneTree, top: int) -> dict[int, int]:
    return {r: m_r(tree, r) for r in range(1, top + 1)}


def total_edges_formula(n: int, m: dict[int, int]) -> int:
    """n! * sum over 2 <= l <= i <= n of (i-1) C(i-2, l-2) m_l."""
    s = 0
    for i in range(2, n + 1):
        for l in range(2, i + 1):
            s += (i - 1) * comb(i - 2, l - 2) * m.get(l, 0)
    return factorial(n) * s


# -- balls in boxes ---------------------------------------------------------------

def compositions(r: int, s: int) -> Iterator[tuple[int, ...]]:
    """All ways to write ``r`` as an ordered sum of ``s`` positive parts."""
    if s == 0:
        if r == 0:
            yield ()
        return
    for first in range(1, r - s + 2):
        for rest in compositions(r - first, s - 1):
            yield (first,) + rest


def count_balls(f: int, r: int, s: int) -> int:
    """Brute force: compositions of ``r`` into ``s`` parts having a proper
    prefix summing to ``f``."""
    _check_balls(f, r, s)
    total = 0
    for comp in compositions(r, s):
        acc = 0
        for part in comp[:-1]:
            acc += part
            if acc == f:
                total += 1
                break
            if acc > f:
                break
    return total


def count_balls_closed(f: int, r: int, s: int) -> int:
    _check_balls(f, r, s)
    return comb(r - 2, s - 2)


def _check_balls(f, r, s):
    if not (r >= s >= 2 and r > f > 0):
        raise ValueError(f"need r >= s >= 2 and r > f > 0, got f={f}, r={r}, s={s}")


def vandermonde_selfcheck(r_max: int) -> bool:
    """Exhaustive comparison of both ball counts with their closed forms."""
    for r in range(2, r_max + 1):
        for s in range(1, r + 1):
            if sum(1 for _ in compositions(r, s)) != comb(r - 1, s - 1):
                return False
        for s in range(2, r + 1):
            for f in range(1, r):
                if count_balls(f, r, s) != count_balls_closed(f, r, s):
                    return False
    return True


# -- predicted census ------------------------------------------------------------

@dataclass(frozen=True)
class CensusRow:
    i: int
    j: int
    multiplicity: int
    cycle_length: int
    orbits: int
    cycles_per_orbit: int
    edges: int


@dataclass
class CensusTable:
    n: int
    m: dict[int, int]
    rows: list[CensusRow]

    @property
    def total_edges(self) -> int:
        return sum(r.edges for r in self.rows)

    def row(self, i: int, j: int) -> CensusRow:
        for r in self.rows:
            if (r.i, r.j) == (i, j):
                return r
        raise KeyError((i, j))

    def to_json(self) -> dict:
        return {"n": self.n, "m": {str(k): v for k, v in self.m.items()},
                "rows": [asdict(r) for r in self.rows],
                "total_edges": self.total_edges}


def census(tree: PlaneTree, n: int) -> CensusTable:
    """Predicted sublevel table: each (i, j) is ``mult`` full orbits, each
    orbit being n!/j disjoint j-cycles."""
    if n < 2:
        raise ValueError("n must be at least 2")
    m = m_values(tree, n)
    nf = factorial(n)
    rows = []
    for i in range(2, n + 1):
        mult = level_multiplicity(i, m)
        for j in range(2, i + 1):
            rows.append(CensusRow(i, j, mult, j, mult, nf // j, nf * mult))
    return CensusTable(n, m, rows)
