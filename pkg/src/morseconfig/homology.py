"""Integer homology of D^n by brute force: enumerate every cell, build the
cubical boundary matrices, and read Betti numbers and torsion off the Smith
normal form.  Nothing here consults the gradient field."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import snf
from .cells import Cell, enumerate_cells, faces
from .tree import PlaneTree

DEFAULT_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    def __init__(self, dim: int, count: int, budget: int):
        super().__init__(f"more than {budget} cells in dimension {dim} "
                         f"(stopped at {count}); raise the budget to proceed")
        self.dim, self.count, self.budget = dim, count, budget


@dataclass
class ChainComplexMatrices:
    """``boundaries[p]`` is ∂_p as sparse columns indexed by p-cells, with
    rows indexing (p-1)-cells; ``boundaries[0]`` is empty."""

    cells: list[list[Cell]]
    boundaries: list[list[dict]] = field(default_factory=list)

    @property
    def top_dim(self) -> int:
        return len(self.cells) - 1

    def shape(self, p: int) -> tuple[int, int]:
        return (len(self.cells[p - 1]), len(self.cells[p]))

    def dense(self, p: int) -> list[list[int]]:
        rows, cols = self.shape(p)
        out = [[0] * cols for _ in range(rows)]
        for c, col in enumerate(self.boundaries[p]):
            for r, v in col.items():
                out[r][c] = v
        return out

    def check_dd_zero(self) -> bool:
        for p in range(2, self.top_dim + 1):
            lower = self.boundaries[p - 1]
            for col in self.boundaries[p]:
                acc: dict[int, int] = {}
                for r, v in col.items():
                    for r2, v2 in lower[r].items():
                        acc[r2] = acc.get(r2, 0) + v * v2
                if any(acc.values()):
                    return False
        return True


def boundary_matrices(tree: PlaneTree, n: int, up_to_dim: int | None = None,
                      budget: int = DEFAULT_BUDGET) -> ChainComplexMatrices:
    top = n if up_to_dim is None else up_to_dim
    cells: list[list[Cell]] = []
    for d in range(top + 1):
        batch = []
        for cell in enumerate_cells(tree, n, d, check_subdivision=False):
            batch.append(cell)
            if len(batch) > budget:
                raise BudgetExceeded(d, len(batch), budget)
        if not batch and d > 0:
            break
        cells.append(batch)
    # one extra dimension so that rank ∂_{top+1} is known when truncating
    mats = ChainComplexMatrices(cells, [[]])
    for p in range(1, len(cells)):
        index = {c: k for k, c in enumerate(cells[p - 1])}
        mats.boundaries.append([{index[f]: s for f, s in faces(c)} for c in cells[p]])
    if not mats.check_dd_zero():
        raise AssertionError("boundary of boundary is nonzero")
    return mats


@dataclass
class HomologyReport:
    betti: dict[int, int]
    torsion: dict[int, list[int]]
    euler: int
    cell_counts: dict[int, int]

    @property
    def torsion_free(self) -> bool:
        return not any(self.torsion.values())

    def to_json(self) -> dict:
        return {"betti": {str(k): v for k, v in self.betti.items()},
                "torsion": {str(k): v for k, v in self.torsion.items() if v},
                "euler": self.euler,
                "cells": {str(k): v for k, v in self.cell_counts.items()}}


def smith_betti(mats: ChainComplexMatrices, torsion: bool = False) -> HomologyReport:
    """Betti numbers ``dim C_p - rank ∂_p - rank ∂_{p+1}``.  With ``torsion``
    the full invariant factors are computed and factors > 1 reported.

    Truncated complexes (``up_to_dim`` below the true top) give correct Betti
    numbers only below the truncation.
    """
    top = mats.top_dim
    ranks = {0: 0, top + 1: 0}
    tors: dict[int, list[int]] = {p: [] for p in range(top + 1)}
    for p in range(1, top + 1):
        if torsion:
            facs = snf.invariant_factors(mats.boundaries[p])
            ranks[p] = len(facs)
            tors[p - 1] = sorted(f for f in facs if f > 1)
        else:
            ranks[p] = snf.rank(mats.boundaries[p])
    counts = {p: len(mats.cells[p]) for p in range(top + 1)}
    betti = {p: counts[p] - ranks[p] - ranks[p + 1] for p in range(top + 1)}
    euler = sum((-1) ** p * c for p, c in counts.items())
    return HomologyReport(betti, tors, euler, counts)


def homology(tree: PlaneTree, n: int, torsion: bool = False,
             budget: int = DEFAULT_BUDGET) -> HomologyReport:
    return smith_betti(boundary_matrices(tree, n, budget=budget), torsion=torsion)
