"""Finite simple undirected graphs, spanning trees and tree routing.

Vertices carry string labels and are indexed in lexicographic label order;
every deterministic output (edge lists, tables, tree listings) follows that
order. Internally edges are pairs of vertex indices ``(i, j)`` with ``i < j``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

DEFAULT_VERTEX_CAP = 8

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graphs, unknown labels or invalid trees."""


class ParseError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    pass


class CapExceededError(GraphError):
    pass


def _edge(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


class Graph:
    """Immutable finite simple graph on string labels."""

    __slots__ = ("vertices", "index", "edges", "adj", "_hash")

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str]] = ()):
        edges = [tuple(e) for e in edges]
        labels = set(vertices)
        for e in edges:
            labels.update(e)
        if not labels:
            raise GraphError("a graph needs at least one vertex")
        for label in labels:
            if not isinstance(label, str) or not label or label.split() != [label]:
                raise GraphError(f"invalid vertex label {label!r}")
        self.vertices: tuple[str, ...] = tuple(sorted(labels))
        self.index: dict[str, int] = {v: i for i, v in enumerate(self.vertices)}
        idx_edges = set()
        for e in edges:
            if len(e) != 2:
                raise GraphError(f"edge {e!r} must have two endpoints")
            a, b = e
            if a == b:
                raise GraphError(f"loop {a} {b} forbidden")
            idx_edges.add(_edge(self.index[a], self.index[b]))
        self.edges: frozenset[Edge] = frozenset(idx_edges)
        adj: list[list[int]] = [[] for _ in self.vertices]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._hash = hash((self.vertices, self.edges))

    @classmethod
    def from_indices(cls, vertices: Sequence[str], edges: Iterable[Edge]) -> "Graph":
        """Build from index pairs; ``vertices`` must already be sorted."""
        return cls(vertices, [(vertices[i], vertices[j]) for i, j in edges])

    @property
    def n(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph({list(self.vertices)}, {self.labeled_edges()})"

    def idx(self, label: str) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise GraphError(f"unknown vertex {label!r}") from None

    def labeled_edges(self) -> list[tuple[str, str]]:
        """Edges as label pairs in canonical order."""
        return [(self.vertices[i], self.vertices[j]) for i, j in sorted(self.edges)]

    def neighbors(self, label: str) -> list[str]:
        return [self.vertices[j] for j in self.adj[self.idx(label)]]

    def degree(self, label: str) -> int:
        return len(self.adj[self.idx(label)])

    def incident_edges(self, i: int) -> frozenset[Edge]:
        """S(u) for the vertex with index ``i``."""
        return frozenset(_edge(i, j) for j in self.adj[i])

    def has_edge(self, a: str, b: str) -> bool:
        return _edge(self.idx(a), self.idx(b)) in self.edges


def parse_graph(text: str) -> Graph:
    """Parse an edge list.

    One edge per line as two whitespace-separated labels. A line holding a
    single label declares an isolated vertex. Blank lines and lines starting
    with ``#`` are ignored; duplicate edges collapse.
    """
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) == 1:
            vertices.append(parts[0])
        elif len(parts) == 2:
            if parts[0] == parts[1]:
                raise ParseError(f"line {lineno}: loop {parts[0]} {parts[1]} forbidden")
            edges.append((parts[0], parts[1]))
        else:
            raise ParseError(f"line {lineno}: expected two labels, got {len(parts)}")
    if not vertices and not edges:
        raise ParseError("no vertices in input")
    return Graph(vertices, edges)


def format_graph(g: Graph) -> str:
    """Canonical edge-list text; isolated vertices are listed on their own."""
    lines = [f"{a} {b}" for a, b in g.labeled_edges()]
    lines += [v for i, v in enumerate(g.vertices) if not g.adj[i]]
    return "\n".join(lines) + "\n"


def _bfs_order(adj: Sequence[Sequence[int]], root: int) -> tuple[list[int], list[int]]:
    """Breadth-first visit order and parent array (-1 for root/unreached)."""
    parent = [-1] * len(adj)
    seen = [False] * len(adj)
    seen[root] = True
    order = [root]
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                order.append(y)
                queue.append(y)
    return order, parent


def is_connected(g: Graph) -> bool:
    order, _ = _bfs_order(g.adj, 0)
    return len(order) == g.n


@dataclass(frozen=True)
class DistanceMap:
    source: str
    dist: Mapping[str, int]

    def __getitem__(self, label: str) -> int:
        return self.dist[label]


def distances(g: Graph, source: str) -> DistanceMap:
    """Breadth-first shortest-path distances from ``source``."""
    s = g.idx(source)
    if not is_connected(g):
        raise DisconnectedGraphError("distances need a connected graph")
    dist = [0] * g.n
    order, parent = _bfs_order(g.adj, s)
    for x in order[1:]:
        dist[x] = dist[parent[x]] + 1
    return DistanceMap(source, {g.vertices[i]: d for i, d in enumerate(dist)})


@dataclass(frozen=True, eq=False)
class SpanningTree:
    """A spanning tree of ``host`` given by an edge subset (index pairs)."""

    host: Graph
    edges: frozenset[Edge]
    adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpanningTree):
            return NotImplemented
        return self.host == other.host and self.edges == other.edges

    def __hash__(self) -> int:
        return hash(self.edges)

    def labeled_edges(self) -> list[tuple[str, str]]:
        v = self.host.vertices
        return [(v[i], v[j]) for i, j in sorted(self.edges)]

    def parents(self, root: int) -> list[int]:
        """Parent array of the tree rooted at vertex index ``root``."""
        return _bfs_order(self.adj, root)[1]

    def first_steps(self, root: int) -> list[int]:
        """For every vertex x, the neighbor of ``root`` on the root-x path.

        Entry ``root`` holds ``root`` itself.
        """
        order, parent = _bfs_order(self.adj, root)
        step = [root] * len(self.adj)
        for x in order[1:]:
            p = parent[x]
            step[x] = x if p == root else step[p]
        return step


def _tree_adj(n: int, edges: Iterable[Edge]) -> tuple[tuple[int, ...], ...]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    return tuple(tuple(sorted(a)) for a in adj)


def make_tree(g: Graph, edges: Iterable[Edge]) -> SpanningTree:
    """Wrap index edges already known to form a spanning tree of ``g``."""
    edges = frozenset(edges)
    return SpanningTree(g, edges, _tree_adj(g.n, edges))


def validate_spanning_tree(g: Graph, edges: Iterable[tuple[str, str]]) -> SpanningTree:
    """Check that labeled ``edges`` form a spanning tree of ``g``.

    Raises GraphError naming the first failing condition: an edge outside
    the host, wrong cardinality, a cycle, or a disconnected result.
    """
    idx_edges = set()
    for a, b in edges:
        if a == b:
            raise GraphError(f"loop {a} {b} is not a host edge")
        e = _edge(g.idx(a), g.idx(b))
        if e not in g.edges:
            raise GraphError(f"edge {a} {b} is not an edge of the host graph")
        idx_edges.add(e)
    return validate_index_tree(g, idx_edges)


def validate_index_tree(g: Graph, edges: Iterable[Edge]) -> SpanningTree:
    edges = frozenset(edges)
    if not edges <= g.edges:
        raise GraphError("tree edges must be a subset of the host edges")
    # union-find catches cycles before the cardinality check reports anything
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in sorted(edges):
        ri, rj = find(i), find(j)
        if ri == rj:
            a, b = g.vertices[i], g.vertices[j]
            raise GraphError(f"edge {a} {b} closes a cycle")
        parent[ri] = rj
    if len(edges) != g.n - 1:
        raise GraphError(f"a spanning tree needs {g.n - 1} edges, got {len(edges)}; it disconnects the host")
    return make_tree(g, edges)


def is_v_spanning_tree(t: SpanningTree, v: str) -> bool:
    """True iff ``t`` contains every host edge incident to ``v``."""
    return t.host.incident_edges(t.host.idx(v)) <= t.edges


def tree_path(t: SpanningTree, u: str, v: str) -> list[str]:
    """Vertices of the unique u-v path in ``t``."""
    g = t.host
    ui, vi = g.idx(u), g.idx(v)
    parent = t.parents(vi)
    path = [ui]
    while path[-1] != vi:
        path.append(parent[path[-1]])
    return [g.vertices[x] for x in path]


def next_vertex(t: SpanningTree, u: str, v: str) -> str:
    """Neighbor of ``u`` on the unique u-v path in ``t``."""
    if u == v:
        raise GraphError("next_vertex needs distinct vertices")
    g = t.host
    return g.vertices[t.parents(g.idx(v))[g.idx(u)]]


def _spanning_tree_edge_sets(g: Graph) -> Iterator[frozenset[Edge]]:
    """Contraction/deletion recursion over edges in canonical order.

    Including an edge contracts it (tracked by a component map); an edge whose
    endpoints already share a component is a loop after contraction and is
    dropped. Excluding an edge (deletion) is only explored while the chosen
    edges plus the remaining ones still connect every vertex.
    """
    n = g.n
    edges = sorted(g.edges)

    def spans(comp: list[int], rest: Sequence[Edge]) -> bool:
        labels = list(comp)

        def find(x: int) -> int:
            while labels[x] != x:
                x = labels[x]
            return x

        for i, j in rest:
            ri, rj = find(i), find(j)
            if ri != rj:
                labels[ri] = rj
        roots = {find(x) for x in range(n)}
        return len(roots) == 1

    def roots_of(comp: list[int], x: int) -> int:
        while comp[x] != x:
            x = comp[x]
        return x

    def rec(k: int, comp: list[int], chosen: tuple[Edge, ...]) -> Iterator[frozenset[Edge]]:
        if len(chosen) == n - 1:
            yield frozenset(chosen)
            return
        if k == len(edges):
            return
        i, j = edges[k]
        ri, rj = roots_of(comp, i), roots_of(comp, j)
        if ri == rj:
            yield from rec(k + 1, comp, chosen)
            return
        contracted = list(comp)
        contracted[ri] = rj
        yield from rec(k + 1, contracted, chosen + ((i, j),))
        if spans(comp, edges[k + 1:]):
            yield from rec(k + 1, comp, chosen)

    if n == 1:
        yield frozenset()
        return
    if not is_connected(g):
        return
    yield from rec(0, list(range(n)), ())


def enumerate_spanning_trees(g: Graph, cap: int = DEFAULT_VERTEX_CAP) -> list[SpanningTree]:
    """Every spanning tree of ``g`` exactly once, in deterministic order."""
    if g.n > cap:
        raise CapExceededError(f"{g.n} vertices exceeds the enumeration cap of {cap}")
    if not is_connected(g):
        raise DisconnectedGraphError("a disconnected graph has no spanning tree")
    return [make_tree(g, es) for es in _spanning_tree_edge_sets(g)]


def v_spanning_trees(g: Graph, v: str, cap: int = DEFAULT_VERTEX_CAP) -> list[SpanningTree]:
    return [t for t in enumerate_spanning_trees(g, cap) if is_v_spanning_tree(t, v)]


def count_v_spanning_trees(g: Graph, v: str, cap: int = DEFAULT_VERTEX_CAP) -> int:
    g.idx(v)
    return len(v_spanning_trees(g, v, cap))
