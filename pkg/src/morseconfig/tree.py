"""Plane trees with the depth-first vertex order used by the gradient field.

Vertices are integers numbered in the order they are first met by a
left-most-branch walk starting at the root, so the integer order *is* the
total order on vertices.  A tree edge is identified with its upper endpoint:
``e(v) = (parent(v), v)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property


class TreeParseError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeLabel:
    at_vertex: int
    label: int


@dataclass(frozen=True, eq=True)
class PlaneTree:
    """Rooted plane tree, optionally the spanning tree of a graph.

    ``parent[0]`` is ``-1``.  ``children[v]`` lists the children of ``v`` in
    plane order.  ``deleted_edges`` are graph edges outside the tree, stored as
    ``(u, w)`` with ``u < w``.
    """

    parent: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]
    deleted_edges: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        nv = len(self.parent)
        if nv == 0:
            raise ValueError("empty tree")
        if self.parent[0] != -1:
            raise ValueError("vertex 0 must be the root")
        if len(self.children[0]) != 1:
            raise ValueError("root must have degree 1 in the tree")
        # numbering must match the plane walk
        walk = []
        stack = [0]
        while stack:
            v = stack.pop()
            walk.append(v)
            stack.extend(reversed(self.children[v]))
        if walk != list(range(nv)):
            raise ValueError("vertex numbering does not follow the plane walk")
        for u, w in self.deleted_edges:
            if not (0 <= u < w < nv):
                raise ValueError(f"bad deleted edge {(u, w)}")

    # -- construction ---------------------------------------------------------

    @classmethod
    def from_nested(cls, nested, deleted_edges=()) -> "PlaneTree":
        """Build from a nested list: each node is the list of its children.

        ``deleted_edges`` refer to walk indices of the result.
        """
        parent: list[int] = []
        children: list[list[int]] = []

        # iterative pre-order walk
        stack = [(nested, -1)]
        while stack:
            node, par = stack.pop()
            v = len(parent)
            parent.append(par)
            children.append([])
            if par >= 0:
                children[par].append(v)
            for child in reversed(node):
                stack.append((child, v))
        return cls(tuple(parent), tuple(tuple(c) for c in children),
                   tuple(sorted(tuple(sorted(e)) for e in deleted_edges)))

    @classmethod
    def from_graph(cls, adjacency: dict, root) -> "PlaneTree":
        """Spanning tree of a graph by depth-first search from ``root``.

        Neighbour lists are taken in the given order, which fixes the plane
        embedding.  Non-tree edges become deleted edges.
        """
        order = {}
        nested_of = {}
        tree_parent = {root: None}
        # recursive DFS on an explicit stack of neighbour iterators
        nested_of[root] = []
        order[root] = 0
        stack = [(root, iter(adjacency[root]))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if w not in order:
                    order[w] = len(order)
                    tree_parent[w] = v
                    nested_of[w] = []
                    nested_of[v].append(nested_of[w])
                    stack.append((w, iter(adjacency[w])))
                    break
            else:
                stack.pop()
        if len(order) != len(adjacency):
            raise ValueError("graph is not connected")
        deleted = set()
        for v, nbrs in adjacency.items():
            for w in nbrs:
                if tree_parent.get(w) == v or tree_parent.get(v) == w:
                    continue
                deleted.add(tuple(sorted((order[v], order[w]))))
        return cls.from_nested(nested_of[root], sorted(deleted))

    # -- basic structure ------------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.parent)

    @property
    def is_tree(self) -> bool:
        return not self.deleted_edges

    @cached_property
    def tree_edges(self) -> tuple[tuple[int, int], ...]:
        """Tree edges ``e(v)`` listed in vertex order of ``v``."""
        return tuple((self.parent[v], v) for v in range(1, self.n_vertices))

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All graph edges: tree edges then deleted edges."""
        return self.tree_edges + self.deleted_edges

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj = [[] for _ in range(self.n_vertices)]
        for u, w in self.edges:
            adj[u].append(w)
            adj[w].append(u)
        return tuple(tuple(a) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def tree_degree(self, v: int) -> int:
        return len(self.children[v]) + (v != 0)

    @cached_property
    def depth(self) -> tuple[int, ...]:
        d = [0] * self.n_vertices
        for v in range(1, self.n_vertices):
            d[v] = d[self.parent[v]] + 1
        return tuple(d)

    @cached_property
    def essential_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n_vertices) if self.degree(v) >= 3)

    @property
    def euler_characteristic(self) -> int:
        return self.n_vertices - len(self.edges)

    def root_path(self, v: int) -> list[int]:
        """Vertices on the path from the root to ``v``, root first."""
        path = [v]
        while v != 0:
            v = self.parent[v]
            path.append(v)
        return path[::-1]

    def is_ancestor(self, u: int, v: int) -> bool:
        """True when ``u`` lies on the root path of ``v`` (``u == v`` allowed)."""
        while self.depth[v] > self.depth[u]:
            v = self.parent[v]
        return u == v

    # -- the order-defining functions -----------------------------------------

    def edge_label(self, v: int, w: int) -> EdgeLabel:
        """Label at ``v`` of the graph edge ``{v, w}``.

        At a non-root vertex the edge toward the root gets 0, children follow
        in plane order, deleted edges come last.  The root's edge is 1.
        """
        if v != 0 and self.parent[v] == w:
            return EdgeLabel(v, 0)
        base = 1
        kids = self.children[v]
        if w in kids and (min(v, w), max(v, w)) not in self.deleted_edges:
            return EdgeLabel(v, base + kids.index(w))
        others = sorted(x for x in self.adjacency[v]
                        if x not in kids and x != self.parent[v])
        if w not in others:
            raise ValueError(f"{v} and {w} are not adjacent")
        return EdgeLabel(v, base + len(kids) + others.index(w))

    def g(self, v: int, w: int) -> int:
        """Label of the edge at ``v`` on the tree path from ``v`` to ``w``."""
        if v == w:
            return 0
        if not self.is_ancestor(v, w):
            return 0
        # child of v on the way down to w
        while self.parent[w] != v:
            w = self.parent[w]
        return self.children[v].index(w) + 1

    def meet(self, u: int, v: int) -> int:
        """Deepest common vertex of the root paths of ``u`` and ``v``."""
        while self.depth[u] > self.depth[v]:
            u = self.parent[u]
        while self.depth[v] > self.depth[u]:
            v = self.parent[v]
        while u != v:
            u, v = self.parent[u], self.parent[v]
        return u

    def vertex_less(self, u: int, v: int) -> bool:
        """The total order on vertices, evaluated from ``g`` and ``meet``.

        Agrees with integer comparison on walk-numbered trees; kept as an
        independent definition for cross-checking.
        """
        if u == v:
            raise ValueError("vertex_less needs distinct vertices")
        w = self.meet(u, v)
        return u == w or (v != w and self.g(w, u) < self.g(w, v))

    def e_of(self, v: int) -> tuple[int, int]:
        if v == 0:
            raise ValueError("the root has no edge e(0)")
        return (self.parent[v], v)

    # -- conversions ----------------------------------------------------------

    def to_nested(self, v: int = 0) -> list:
        return [self.to_nested(c) for c in self.children[v]]

    def to_parens(self) -> str:
        out = []
        stack = [(0, False)]
        while stack:
            v, closing = stack.pop()
            if closing:
                out.append(")")
                continue
            out.append("(")
            stack.append((v, True))
            for c in reversed(self.children[v]):
                stack.append((c, False))
        return "".join(out)

    def __str__(self) -> str:
        return self.to_parens()


def parse_plane_tree(text: str) -> PlaneTree:
    """Parse the balanced-parenthesis format; whitespace is ignored.

    >>> parse_plane_tree("((()()))").children
    ((1,), (2, 3), (), ())
    """
    chars = [c for c in text if not c.isspace()]
    if not chars:
        raise TreeParseError("empty tree description")
    stack: list[list] = []
    top = None
    for pos, c in enumerate(chars):
        if c == "(":
            if top is not None:
                raise TreeParseError(f"text after the root closes (position {pos})")
            node: list = []
            if stack:
                stack[-1].append(node)
            stack.append(node)
        elif c == ")":
            if not stack:
                raise TreeParseError(f"unbalanced ')' at position {pos}")
            node = stack.pop()
            if not stack:
                top = node
        else:
            raise TreeParseError(f"unexpected character {c!r} at position {pos}")
    if stack or top is None:
        raise TreeParseError("unbalanced parentheses")
    if len(top) != 1:
        raise TreeParseError(f"root must have exactly one child, found {len(top)}")
    return PlaneTree.from_nested(top)


def attach_root(nested) -> PlaneTree:
    """Hang ``nested`` (rooted anywhere) from a new pendant root vertex."""
    return PlaneTree.from_nested([nested])


def random_plane_tree(rng, essential: int, max_degree: int = 5) -> PlaneTree:
    """A plane tree with exactly ``essential`` essential vertices, each of
    degree between 3 and ``max_degree``, every other vertex a leaf (or the
    root).  ``rng`` is a :class:`random.Random`."""
    if essential < 1 or max_degree < 3:
        raise ValueError("need essential >= 1 and max_degree >= 3")
    kids: list[list] = [[] for _ in range(essential)]
    slots = [rng.randint(3, max_degree) - 1 for _ in range(essential)]
    for k in range(1, essential):
        free = [p for p in range(k) if len(kids[p]) < slots[p]]
        p = rng.choice(free)
        kids[p].append(k)
    for p in range(essential):
        kids[p] += [None] * (slots[p] - len(kids[p]))
        rng.shuffle(kids[p])

    def build(k):
        return [[] if c is None else build(c) for c in kids[k]]

    return PlaneTree.from_nested([build(0)])


# -- subdivision ----------------------------------------------------------------

def _segments(tree: PlaneTree):
    """Maximal chains between vertices of degree != 2.

    Yields lists of edges ``(p, c)`` (tree edges) or ``(u, w)`` (any graph
    edge) walked from one end.  Only meaningful on trees and on graphs where
    every cycle contains a vertex of degree != 2.
    """
    adj = tree.adjacency
    seen = set()
    for s in range(tree.n_vertices):
        if len(adj[s]) == 2:
            continue
        for w in adj[s]:
            key = (min(s, w), max(s, w))
            if key in seen:
                continue
            seg = [(s, w)]
            seen.add(key)
            prev, cur = s, w
            while len(adj[cur]) == 2:
                nxt = adj[cur][0] if adj[cur][1] == prev else adj[cur][1]
                key = (min(cur, nxt), max(cur, nxt))
                seen.add(key)
                seg.append((cur, nxt))
                prev, cur = cur, nxt
            yield seg


def _girth(tree: PlaneTree) -> float:
    adj = tree.adjacency
    best = float("inf")
    for s in range(tree.n_vertices):
        dist = {s: 0}
        par = {s: -1}
        q = deque([s])
        while q:
            v = q.popleft()
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    par[w] = v
                    q.append(w)
                elif par[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def is_sufficiently_subdivided(tree: PlaneTree, n: int) -> bool:
    """Paths between distinct vertices of degree != 2 have >= n-1 edges;
    cycles (graphs only) have >= n+1 edges."""
    for seg in _segments(tree):
        start, end = seg[0][0], seg[-1][1]
        if start != end and len(seg) < n - 1:
            return False
    if tree.deleted_edges and _girth(tree) < n + 1:
        return False
    return True


def subdivide_for(tree: PlaneTree, n: int) -> PlaneTree:
    """Insert the minimal number of degree-2 vertices so that ``tree`` is
    ``n``-sufficiently subdivided.  The deficit of each chain is spread evenly
    over its edges; the result is renumbered by the plane walk."""
    if not tree.is_tree:
        raise ValueError("subdivision is only implemented for trees")
    if n < 2:
        raise ValueError("n must be at least 2")
    extra = {}  # child vertex c -> number of vertices inserted on (parent, c)
    for seg in _segments(tree):
        deficit = (n - 1) - len(seg)
        if deficit <= 0:
            continue
        q, r = divmod(deficit, len(seg))
        for t, (u, w) in enumerate(seg):
            c = w if tree.parent[w] == u else u
            extra[c] = q + (1 if t < r else 0)
    if not extra:
        return tree

    def build(v):
        node = []
        for c in tree.children[v]:
            sub = build(c)
            for _ in range(extra.get(c, 0)):
                sub = [sub]
            node.append(sub)
        return node

    return PlaneTree.from_nested(build(0))
