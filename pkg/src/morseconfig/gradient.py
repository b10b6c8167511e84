"""The ordered discrete gradient field on D^n.

Cells are classified directly from their blocked vertices and
order-respecting edges; :func:`inductive_field` rebuilds the same pairing
degree by degree and is kept as a cross-check on small instances.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from graphlib import CycleError, TopologicalSorter
from typing import Iterable, Mapping

from .cells import Cell, dim, enumerate_cells, entry_key_for, faces, to_unordered
from .tree import PlaneTree


class Kind(str, Enum):
    CRITICAL = "critical"
    REDUNDANT = "redundant"
    COLLAPSIBLE = "collapsible"


@dataclass(frozen=True)
class CellClass:
    """``pair_index`` is the position of the minimal unblocked vertex
    (redundant) or of the minimal order-respecting edge (collapsible)."""

    kind: Kind
    pair_index: int | None = None


CRITICAL = CellClass(Kind.CRITICAL)


def _occupied(cell: Cell) -> set[int]:
    pts: set[int] = set()
    for x in cell:
        if isinstance(x, int):
            pts.add(x)
        else:
            pts.update(x)
    return pts


def is_blocked(tree: PlaneTree, cell: Cell, i: int) -> bool:
    """Whether vertex entry ``i`` is blocked; the root always is."""
    v = cell[i]
    if not isinstance(v, int):
        raise ValueError(f"entry {i} is an edge, not a vertex")
    if v == 0:
        return True
    return tree.parent[v] in _occupied(cell)


def unblocked_vertices(tree: PlaneTree, cell: Cell) -> list[tuple[int, int]]:
    """``(vertex, position)`` for every unblocked vertex entry."""
    occ = _occupied(cell)
    parent = tree.parent
    return [(v, i) for i, v in enumerate(cell)
            if isinstance(v, int) and v != 0 and parent[v] not in occ]


def is_order_respecting(tree: PlaneTree, cell: Cell, i: int) -> bool:
    """Edge entry ``i = (a, b)`` is order respecting when it is a tree edge
    and no vertex entry hanging off ``a`` lies strictly between ``a`` and ``b``.

    Only vertices whose root edge touches ``a`` are considered (those are the
    ones the edge can block); on trees this is the same as tree adjacency.
    """
    x = cell[i]
    if isinstance(x, int):
        raise ValueError(f"entry {i} is a vertex, not an edge")
    a, b = x
    if tree.parent[b] != a:
        return False  # deleted edge
    parent = tree.parent
    for c in cell:
        if isinstance(c, int) and c != 0 and parent[c] == a and a < c < b:
            return False
    return True


def order_respecting_edges(tree: PlaneTree, cell: Cell) -> list[tuple[int, int]]:
    """``(upper endpoint, position)`` for each order-respecting edge."""
    parent = tree.parent
    hanging: dict[int, list[int]] = {}
    for c in cell:
        if isinstance(c, int) and c != 0:
            hanging.setdefault(parent[c], []).append(c)
    out = []
    for i, x in enumerate(cell):
        if isinstance(x, int):
            continue
        a, b = x
        if parent[b] != a:
            continue
        if any(c < b for c in hanging.get(a, ())):
            continue
        out.append((b, i))
    return out


def classify(tree: PlaneTree, cell: Cell) -> CellClass:
    ub = unblocked_vertices(tree, cell)
    ore = order_respecting_edges(tree, cell)
    if not ub and not ore:
        return CRITICAL
    if ore:
        v, i = min(ore)
        if not ub or min(ub)[0] > v:
            return CellClass(Kind.COLLAPSIBLE, i)
    return CellClass(Kind.REDUNDANT, min(ub)[1])


def elementary_reduction(tree: PlaneTree, cell: Cell, i: int) -> Cell:
    v = cell[i]
    return cell[:i] + ((tree.parent[v], v),) + cell[i + 1:]


def principal_reduction(tree: PlaneTree, cell: Cell) -> Cell | None:
    ub = unblocked_vertices(tree, cell)
    if not ub:
        return None
    return elementary_reduction(tree, cell, min(ub)[1])


def collapse_source(tree: PlaneTree, cell: Cell) -> Cell:
    """The redundant cell paired with a collapsible ``cell``."""
    c = classify(tree, cell)
    if c.kind is not Kind.COLLAPSIBLE:
        raise ValueError(f"{cell} is {c.kind.value}, not collapsible")
    i = c.pair_index
    return cell[:i] + (cell[i][1],) + cell[i + 1:]


def unordered_principal_reduction(tree: PlaneTree, ucell: Cell) -> Cell | None:
    """The same reduction on unordered (sorted) cells."""
    pr = principal_reduction(tree, ucell)
    return None if pr is None else to_unordered(pr, tree)


# -- whole-field construction ---------------------------------------------------

@dataclass
class GradientField:
    """Pairs redundant cell -> its collapsible cofacet ``pr(cell)``."""

    tree: PlaneTree
    n: int
    pairs: dict = field(default_factory=dict)
    up_to_dim: int = 0

    def __getitem__(self, cell: Cell) -> Cell:
        return self.pairs[cell]

    def __contains__(self, cell: Cell) -> bool:
        return cell in self.pairs

    def __len__(self) -> int:
        return len(self.pairs)

    def collapsible(self) -> set:
        return set(self.pairs.values())

    def restricted(self, d: int) -> dict:
        return {a: b for a, b in self.pairs.items() if dim(a) == d}


def build_field(tree: PlaneTree, n: int, up_to_dim: int) -> GradientField:
    """Pair every redundant cell of dimension <= ``up_to_dim``."""
    pairs = {}
    for d in range(up_to_dim + 1):
        for cell in enumerate_cells(tree, n, d, check_subdivision=False):
            if classify(tree, cell).kind is Kind.REDUNDANT:
                pairs[cell] = principal_reduction(tree, cell)
    return GradientField(tree, n, pairs, up_to_dim)


def inductive_field(tree: PlaneTree, n: int, up_to_dim: int) -> GradientField:
    """The pairing built degree by degree: a k-cell is paired with ``pr`` of
    itself unless it was already used as the image of a (k-1)-cell."""
    pairs = {}
    images: set = set()
    for d in range(up_to_dim + 1):
        new_images = set()
        for cell in enumerate_cells(tree, n, d, check_subdivision=False):
            if cell in images:
                continue
            pr = principal_reduction(tree, cell)
            if pr is not None:
                pairs[cell] = pr
                new_images.add(pr)
        images = new_images
    return GradientField(tree, n, pairs, up_to_dim)


def check_acyclic(pairs: Mapping, d: int) -> tuple[bool, list | None]:
    """Look for a closed W-path among ``d``-cells.

    ``pairs`` maps redundant cells to their cofacets (a :class:`GradientField`
    or a plain dict).  Returns ``(True, None)`` or ``(False, cycle)``.
    """
    if isinstance(pairs, GradientField):
        pairs = pairs.pairs
    graph = {}
    for a, b in pairs.items():
        if dim(a) != d:
            continue
        graph[a] = [f for f, _ in faces(b) if f != a and f in pairs]
    try:
        tuple(TopologicalSorter(graph).static_order())
    except CycleError as exc:
        return False, list(exc.args[1])
    return True, None


# -- counting sweeps -------------------------------------------------------------

def _threads() -> int:
    try:
        return max(1, int(os.environ.get("MORSECONFIG_THREADS", "1")))
    except ValueError:
        return 1


def _count_prefix(args) -> Counter:
    tree, n, d, ordered, prefix = args
    out = Counter()
    for cell in enumerate_cells(tree, n, d, ordered=ordered, prefix=prefix,
                                check_subdivision=False):
        out[classify(tree, cell).kind] += 1
    return out


def classification_counts(tree: PlaneTree, n: int, d: int, *,
                          ordered: bool = True, workers: int | None = None) -> Counter:
    """Counts of each :class:`Kind` among ``d``-cells.

    With ``workers > 1`` (default from ``MORSECONFIG_THREADS``) the stream is
    split by first entry across processes; totals are order independent.
    """
    workers = _threads() if workers is None else workers
    if workers <= 1 or n < 2:
        return _count_prefix((tree, n, d, ordered, ()))
    key = entry_key_for(tree)
    firsts = sorted(list(range(tree.n_vertices)) + list(tree.edges), key=key)
    jobs = [(tree, n, d, ordered, (x,)) for x in firsts]
    total = Counter()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for c in pool.map(_count_prefix, jobs):
            total.update(c)
    return total


@dataclass
class CriticalCounts:
    ordered: dict[int, int]
    unordered: dict[int, int]

    def max_dim(self) -> int:
        nz = [d for d, c in self.ordered.items() if c]
        return max(nz) if nz else -1

    def to_json(self) -> dict:
        return {"ordered": {str(k): v for k, v in self.ordered.items()},
                "unordered": {str(k): v for k, v in self.unordered.items()}}


def count_critical(tree: PlaneTree, n: int, *, workers: int | None = None) -> CriticalCounts:
    """Critical cells per dimension in D^n and, separately, in UD^n."""
    ordered, unordered = {}, {}
    for d in range(n + 1):
        co = classification_counts(tree, n, d, workers=workers)
        cu = classification_counts(tree, n, d, ordered=False, workers=workers)
        if not co and not cu:
            continue
        ordered[d] = co[Kind.CRITICAL]
        unordered[d] = cu[Kind.CRITICAL]
    return CriticalCounts(ordered, unordered)


def classification_report(tree: PlaneTree, n: int, *, workers: int | None = None) -> list[dict]:
    rows = []
    for d in range(n + 1):
        c = classification_counts(tree, n, d, workers=workers)
        if not c:
            continue
        rows.append({"dim": d, "critical": c[Kind.CRITICAL],
                     "redundant": c[Kind.REDUNDANT],
                     "collapsible": c[Kind.COLLAPSIBLE]})
    return rows


def critical_cells(tree: PlaneTree, n: int, d: int) -> Iterable[Cell]:
    for cell in enumerate_cells(tree, n, d, check_subdivision=False):
        if classify(tree, cell).kind is Kind.CRITICAL:
            yield cell

