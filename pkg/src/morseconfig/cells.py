"""Cells of the discretized configuration spaces D^n and UD^n of a graph.

A cell is a tuple of ``n`` entries.  A vertex entry is an ``int``; an edge
entry is a pair ``(u, w)`` with ``u < w``.  Closures of the entries are
pairwise disjoint.  Unordered cells are the same tuples sorted by
:func:`entry_key`.
"""

from __future__ import annotations

import warnings
from itertools import permutations
from typing import Iterator, Union

from .tree import PlaneTree, is_sufficiently_subdivided

Entry = Union[int, tuple]
Cell = tuple


def is_vertex(x: Entry) -> bool:
    return isinstance(x, int)


def closure(x: Entry) -> tuple:
    return (x,) if isinstance(x, int) else x


def dim(cell: Cell) -> int:
    return sum(1 for x in cell if not isinstance(x, int))


def entry_key(x: Entry) -> tuple:
    """Vertices by index, then tree edges by upper endpoint, then the rest.

    An edge ``(u, w)`` sorts as a tree edge ``e(w)`` exactly when ``w``'s
    parent is ``u``; that information lives in the tree, so deleted edges are
    distinguished by :func:`entry_key_for`.
    """
    if isinstance(x, int):
        return (0, x, 0)
    return (1, x[1], x[0])


def entry_key_for(tree: PlaneTree):
    deleted = set(tree.deleted_edges)

    def key(x):
        if isinstance(x, int):
            return (0, x, 0)
        if x in deleted:
            return (2, x[0], x[1])
        return (1, x[1], x[0])

    return key


def is_cell(tree: PlaneTree, cell: Cell) -> bool:
    """Disjoint-closure predicate, checked entry by entry."""
    edges = set(tree.edges)
    seen: set[int] = set()
    for x in cell:
        if isinstance(x, int):
            if not 0 <= x < tree.n_vertices:
                return False
        elif tuple(x) not in edges:
            return False
        pts = closure(x)
        if seen.intersection(pts):
            return False
        seen.update(pts)
    return True


def _candidates(tree: PlaneTree) -> list[tuple[Entry, tuple]]:
    key = entry_key_for(tree)
    ents: list[Entry] = list(range(tree.n_vertices)) + list(tree.edges)
    ents.sort(key=key)
    return [(x, closure(x)) for x in ents]


def enumerate_cells(tree: PlaneTree, n: int, dim: int, *,
                    ordered: bool = True, prefix: Cell = (),
                    check_subdivision: bool = True) -> Iterator[Cell]:
    """All cells of dimension ``dim`` in D^n (``ordered``) or UD^n.

    Backtracks position by position, pruning any entry whose closure meets an
    occupied point.  Output is lexicographic in :func:`entry_key_for`.
    Unordered cells come out as strictly increasing tuples.  ``prefix`` fixes
    the first entries, which lets callers split the stream.
    """
    if check_subdivision and n >= 2 and not is_sufficiently_subdivided(tree, n):
        warnings.warn(f"tree is not {n}-sufficiently subdivided; D^n is still "
                      "defined but need not model the configuration space",
                      stacklevel=2)
    if dim < 0 or dim > n:
        return
    cands = _candidates(tree)
    rank = {x: i for i, (x, _) in enumerate(cands)}
    occupied: set[int] = set()
    cell: list[Entry] = []
    edges_used = 0
    for x in prefix:
        pts = closure(x)
        if occupied.intersection(pts):
            return
        occupied.update(pts)
        cell.append(x)
        edges_used += not isinstance(x, int)
    if len(prefix) > n or edges_used > dim:
        return
    if not ordered:
        for a, b in zip(prefix, prefix[1:]):
            if rank[a] >= rank[b]:
                return

    def rec(start: int, edges_used: int):
        k = len(cell)
        if k == n:
            if edges_used == dim:
                yield tuple(cell)
            return
        need_edges = dim - edges_used
        slots = n - k
        for idx in range(start if not ordered else 0, len(cands)):
            x, pts = cands[idx]
            is_edge = not isinstance(x, int)
            if is_edge and need_edges == 0:
                continue
            if not is_edge and need_edges >= slots:
                continue
            if occupied.intersection(pts):
                continue
            occupied.update(pts)
            cell.append(x)
            yield from rec(idx + 1, edges_used + is_edge)
            cell.pop()
            occupied.difference_update(pts)

    start = rank[prefix[-1]] + 1 if (prefix and not ordered) else 0
    yield from rec(start, edges_used)


def cell_counts(tree: PlaneTree, n: int, *, ordered: bool = True) -> dict[int, int]:
    counts = {}
    for d in range(n + 1):
        c = sum(1 for _ in enumerate_cells(tree, n, d, ordered=ordered,
                                          check_subdivision=False))
        if c:
            counts[d] = c
    return counts


def faces(cell: Cell) -> list[tuple[Cell, int]]:
    """Facets with cubical signs: the k-th edge entry (by position)
    contributes ``(-1)**k * (final face - initial face)``."""
    out = []
    k = 0
    for pos, x in enumerate(cell):
        if isinstance(x, int):
            continue
        sign = -1 if k % 2 else 1
        u, w = x
        out.append((cell[:pos] + (u,) + cell[pos + 1:], -sign))
        out.append((cell[:pos] + (w,) + cell[pos + 1:], sign))
        k += 1
    if not out:
        raise ValueError("a 0-cell has no faces")
    return out


def to_unordered(cell: Cell, tree: PlaneTree | None = None) -> Cell:
    key = entry_key if tree is None or tree.is_tree else entry_key_for(tree)
    return tuple(sorted(cell, key=key))


def orbit_representatives(tree: PlaneTree, n: int, dim: int) -> Iterator[Cell]:
    return enumerate_cells(tree, n, dim, ordered=False)


def act(cell: Cell, perm) -> Cell:
    """Right action permuting coordinates: ``(x·σ)_k = x_{σ(k)}``.

    ``perm`` is a 0-based one-line permutation.  With this convention
    ``act(act(c, s), t) == act(c, compose(s, t))`` where
    ``compose(s, t)[k] = s[t[k]]``.
    """
    return tuple(cell[p] for p in perm)


def orbit(cell: Cell) -> Iterator[Cell]:
    for p in permutations(range(len(cell))):
        yield act(cell, p)


def cell_to_json(cell: Cell) -> dict:
    return {"entries": [{"v": x} if isinstance(x, int) else {"e": list(x)}
                        for x in cell]}


def cell_from_json(obj: dict) -> Cell:
    out = []
    for ent in obj["entries"]:
        if "v" in ent:
            out.append(int(ent["v"]))
        else:
            u, w = ent["e"]
            out.append((int(u), int(w)))
    return tuple(out)
