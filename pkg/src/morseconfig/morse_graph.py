"""The Morse graph G(n, T): one vertex per critical 0-cell (a permutation),
one oriented edge per critical 1-cell, endpoints found by following gradient
paths down from the cell's two facets."""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from math import factorial

import networkx as nx

from . import perms
from .cells import Cell, act, cell_from_json, cell_to_json, to_unordered
from .counting import census, level_multiplicity, m_values, total_edges_formula
from .gradient import Kind, classify, critical_cells, unblocked_vertices
from .tree import PlaneTree, is_sufficiently_subdivided


class StructureMismatch(AssertionError):
    """An observed Morse-graph fact disagrees with its closed form."""


@dataclass(frozen=True)
class MorseEdge:
    source: tuple
    target: tuple
    level: int
    j: int
    critical_cell: Cell

    @property
    def sublevel(self) -> tuple[int, int]:
        return (self.level, self.j)


@dataclass
class MorseGraph:
    n: int
    vertices: list
    edges: list = field(default_factory=list)

    def multiplicities(self) -> Counter:
        return Counter((e.source, e.target) for e in self.edges)

    def to_networkx(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.vertices)
        for e in self.edges:
            g.add_edge(e.source, e.target, sublevel=e.sublevel, cell=e.critical_cell)
        return g

    def n_components(self) -> int:
        return nx.number_weakly_connected_components(self.to_networkx())

    def betti1(self) -> int:
        return len(self.edges) - len(self.vertices) + self.n_components()

    def has_loops(self) -> bool:
        return any(e.source == e.target for e in self.edges)

    # -- export -----------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "vertices": [perms.one_line(v) for v in self.vertices],
            "edges": [{"source": perms.one_line(e.source),
                       "target": perms.one_line(e.target),
                       "level_i": e.level, "level_j": e.j,
                       "critical_cell": cell_to_json(e.critical_cell)}
                      for e in self.edges],
        }

    @classmethod
    def from_json(cls, obj) -> "MorseGraph":
        if isinstance(obj, str):
            obj = json.loads(obj)
        edges = [MorseEdge(perms.parse_one_line(e["source"]),
                           perms.parse_one_line(e["target"]),
                           e["level_i"], e["level_j"],
                           cell_from_json(e["critical_cell"]))
                 for e in obj["edges"]]
        return cls(obj["n"], [perms.parse_one_line(v) for v in obj["vertices"]], edges)

    def to_dot(self) -> str:
        lines = ["digraph G {"]
        for v in self.vertices:
            lab = perms.one_line(v)
            lines.append(f'  "{lab}" [label="{lab}"];')
        for e in self.edges:
            lines.append(f'  "{perms.one_line(e.source)}" -> "{perms.one_line(e.target)}" '
                         f'[sublevel="({e.level},{e.j})"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def gradient_terminal(tree: PlaneTree, zero_cell: Cell) -> tuple:
    """Follow the unique gradient path from a 0-cell to a critical 0-cell.

    Each step pairs the minimal unblocked vertex with its root edge and moves
    to the other facet, i.e. slides that particle one step toward the root.
    """
    cell = list(zero_cell)
    budget = tree.n_vertices * len(cell) + 1
    for _ in range(budget):
        ub = unblocked_vertices(tree, tuple(cell))
        if not ub:
            out = tuple(cell)
            if not perms.is_perm(out):
                raise StructureMismatch(f"critical 0-cell {out} is not a permutation")
            return out
        v, i = min(ub)
        cell[i] = tree.parent[v]
    raise StructureMismatch(f"gradient path from {zero_cell} does not terminate")


def canonical_representative(cell: Cell) -> Cell:
    """Orbit representative with the edge first and vertices increasing."""
    edge = next(x for x in cell if not isinstance(x, int))
    verts = sorted(x for x in cell if isinstance(x, int))
    return (edge, *verts)


def sublevel_from_cell(cell: Cell, n: int) -> tuple[int, int]:
    """Combinatorial (i, j) of a critical 1-cell: ``i`` is ``n`` minus the
    size of the stack 0, 1, ... sitting on the root; ``j - 1`` counts the
    remaining vertices lying strictly between the edge's endpoints."""
    rep = canonical_representative(cell)
    (a0, a1), verts = rep[0], rep[1:]
    k = 0
    while k < len(verts) and verts[k] == k:
        k += 1
    tail = verts[k:]
    j = 1 + sum(1 for v in tail if a0 < v < a1)
    return n - k, j


def sublevel_from_endpoints(source: tuple, target: tuple, level: int) -> int | None:
    """Algebraic j: ``source * target^-1`` must be the cycle starting at
    ``n - level`` (0-based) of some length j."""
    n = len(source)
    q = perms.compose(source, perms.inverse(target))  # = sigma_{i,j}
    cyc = [c for c in perms.cycles(q) if len(c) > 1]
    if len(cyc) != 1:
        return None
    j = len(cyc[0])
    if not 2 <= j <= level:
        return None
    if q != perms.sublevel_cycle(n, level, j):
        return None
    return j


def sublevel_of(edge: MorseEdge, n: int | None = None) -> tuple[int, int]:
    n = len(edge.source) if n is None else n
    level, j = sublevel_from_cell(edge.critical_cell, n)
    j_alg = sublevel_from_endpoints(edge.source, edge.target, level)
    if j_alg != j:
        raise StructureMismatch(
            f"edge {edge.critical_cell}: combinatorial sublevel {(level, j)} but "
            f"endpoints {edge.source}->{edge.target} give j={j_alg}")
    return level, j


def morse_edge(tree: PlaneTree, cell: Cell, n: int) -> MorseEdge:
    pos = next(p for p, x in enumerate(cell) if not isinstance(x, int))
    u, w = cell[pos]
    src = gradient_terminal(tree, cell[:pos] + (u,) + cell[pos + 1:])
    tgt = gradient_terminal(tree, cell[:pos] + (w,) + cell[pos + 1:])
    level, j = sublevel_from_cell(cell, n)
    e = MorseEdge(src, tgt, level, j, cell)
    sublevel_of(e, n)
    return e


def build_morse_graph(tree: PlaneTree, n: int) -> MorseGraph:
    if not tree.is_tree:
        raise ValueError("Morse graphs are only assembled for trees")
    if n < 2:
        raise ValueError("n must be at least 2")
    if not is_sufficiently_subdivided(tree, n):
        raise ValueError(f"tree is not {n}-sufficiently subdivided")
    if tree.n_vertices < n:
        raise ValueError("fewer vertices than particles")
    g = MorseGraph(n, perms.all_perms(n))
    for cell in critical_cells(tree, n, 1):
        g.edges.append(morse_edge(tree, cell, n))
    return g


# -- structural verification ------------------------------------------------------

@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class StructureReport:
    n: int
    checks: list = field(default_factory=list)
    sublevel_counts: dict = field(default_factory=dict)
    orbit_census: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = ""):
        self.checks.append(Check(name, bool(ok), detail))

    def failures(self) -> list:
        return [c for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {"n": self.n, "ok": self.ok,
                "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail}
                           for c in self.checks],
                "sublevels": [{"i": i, "j": j, "edges": c}
                              for (i, j), c in sorted(self.sublevel_counts.items())],
                "orbits": self.orbit_census}


def _cycle_structure(edges: list) -> tuple[bool, Counter]:
    """Whether directed edges form disjoint cycles, and their length census."""
    out = {}
    indeg = Counter()
    for e in edges:
        if e.source in out:
            return False, Counter()
        out[e.source] = e.target
        indeg[e.target] += 1
    if any(c != 1 for c in indeg.values()) or set(indeg) != set(out):
        return False, Counter()
    seen = set()
    lengths = Counter()
    for s in out:
        if s in seen:
            continue
        k, length = s, 0
        while k not in seen:
            seen.add(k)
            k = out[k]
            length += 1
        lengths[length] += 1
    return True, lengths


def verify_structure(graph: MorseGraph, tree: PlaneTree, n: int) -> StructureReport:
    rep = StructureReport(n)
    nf = factorial(n)
    m = m_values(tree, n)
    table = census(tree, n)

    rep.add("vertex count", len(graph.vertices) == nf,
            f"{len(graph.vertices)} vertices, expected {nf}")
    rep.add("no loops", not graph.has_loops())

    # edge law target = sigma_{i,j}^{-1} source
    bad = []
    by_sub = defaultdict(list)
    for e in graph.edges:
        try:
            sub = sublevel_of(e, n)
        except StructureMismatch as exc:
            bad.append(str(exc))
            continue
        by_sub[sub].append(e)
        law = perms.compose(perms.inverse(perms.sublevel_cycle(n, *sub)), e.source)
        if law != e.target:
            bad.append(f"{e.critical_cell}: target {e.target} != {law}")
    rep.add("target = sigma_ij^-1 * source", not bad, "; ".join(bad[:5]))
    rep.sublevel_counts = {k: len(v) for k, v in by_sub.items()}

    # per-sublevel counts and multiplicities
    for row in table.rows:
        got = len(by_sub.get((row.i, row.j), []))
        rep.add(f"|E_{row.i},{row.j}|", got == row.edges,
                f"observed {got}, predicted {row.edges}")
        mult = Counter((e.source, e.target) for e in by_sub.get((row.i, row.j), []))
        wrong = {k: v for k, v in mult.items() if v != row.multiplicity}
        rep.add(f"multiplicity E_{row.i},{row.j}", not wrong,
                f"predicted {row.multiplicity}; mismatches {list(wrong.items())[:3]}")
    stray = set(by_sub) - {(r.i, r.j) for r in table.rows}
    rep.add("no unexpected sublevels", not stray, str(sorted(stray)))

    # repeated edges stay inside one sublevel
    pair_subs = defaultdict(set)
    for sub, es in by_sub.items():
        for e in es:
            pair_subs[frozenset((e.source, e.target))].add(sub)
    mixed = [tuple(sorted(k)) for k, v in pair_subs.items() if len(v) > 1]
    rep.add("multiple edges share a sublevel", not mixed, str(mixed[:3]))

    # orbits: n! edges forming n!/j disjoint j-cycles
    orbits = defaultdict(list)
    for e in graph.edges:
        orbits[to_unordered(e.critical_cell, tree)].append(e)
    orbit_bad = []
    for key, es in sorted(orbits.items(), key=lambda kv: str(kv[0])):
        subs = {e.sublevel for e in es}
        ok, lengths = _cycle_structure(es)
        (i, j), = subs if len(subs) == 1 else ((None, None),)
        rep.orbit_census.append({
            "representative": cell_to_json(canonical_representative(es[0].critical_cell)),
            "i": i, "j": j, "edges": len(es),
            "cycles": {str(k): v for k, v in sorted(lengths.items())}})
        if len(subs) != 1 or len(es) != nf or not ok or dict(lengths) != {j: nf // j}:
            orbit_bad.append(key)
    rep.add("orbits are n!/j disjoint j-cycles", not orbit_bad, str(orbit_bad[:3]))
    for row in table.rows:
        got = sum(1 for o in rep.orbit_census if (o["i"], o["j"]) == (row.i, row.j))
        rep.add(f"orbit count E_{row.i},{row.j}", got == row.orbits,
                f"observed {got}, predicted {row.orbits}")

    # equivariance under adjacent transpositions (generators of S_n)
    lookup = {e.critical_cell: e for e in graph.edges}
    eq_bad = []
    for k in range(n - 1):
        mu = list(range(n))
        mu[k], mu[k + 1] = mu[k + 1], mu[k]
        mu = tuple(mu)
        for e in graph.edges:
            f = lookup.get(act(e.critical_cell, mu))
            if (f is None or f.source != perms.compose(e.source, mu)
                    or f.target != perms.compose(e.target, mu)
                    or f.sublevel != e.sublevel):
                eq_bad.append((e.critical_cell, mu))
    rep.add("S_n-equivariance of edges", not eq_bad, str(eq_bad[:3]))

    total = total_edges_formula(n, m)
    rep.add("total edge count", len(graph.edges) == total,
            f"observed {len(graph.edges)}, formula {total}")
    return rep


def level_multiplicities(tree: PlaneTree, n: int) -> dict[int, int]:
    m = m_values(tree, n)
    return {i: level_multiplicity(i, m) for i in range(2, n + 1)}


def is_critical_edge(tree: PlaneTree, cell: Cell) -> bool:
    return classify(tree, cell).kind is Kind.CRITICAL and sum(
        1 for x in cell if not isinstance(x, int)) == 1
