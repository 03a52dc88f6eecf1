"""Building smooth travel groupoids from a single seed spanning tree.

Given a root ``o`` and an o-spanning tree ``T_o``, every other vertex ``u``
gets a u-spanning tree ``T_u`` by swapping in the missing edges at ``u``:
each added edge ``{u, x}`` closes a cycle with the tree path from ``u`` to
``x``, and the path edge at ``x`` is dropped. The operation is then read
upward, ``u * v`` being the neighbor of ``u`` on the u-v path in ``T_u``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    ParseError,
    SpanningTree,
    _bfs_order,
    _edge,
    is_connected,
    is_v_spanning_tree,
    make_tree,
    validate_spanning_tree,
)
from .groupoid import OperationTable


class InvalidSeedError(GraphError):
    """The seed tree is not an o-spanning tree of the graph."""


@dataclass(frozen=True)
class TreeFamily:
    host: Graph
    root: str | None
    trees: Mapping[str, SpanningTree]

    def __getitem__(self, v: str) -> SpanningTree:
        return self.trees[v]

    def validate(self) -> None:
        for v in self.host.vertices:
            t = self.trees.get(v)
            if t is None:
                raise GraphError(f"family has no tree for {v}")
            if t.host != self.host:
                raise GraphError(f"tree for {v} lives on a different graph")
            if not is_v_spanning_tree(t, v):
                raise GraphError(f"tree for {v} is not {v}-spanning")


def default_seed(g: Graph, o: str) -> SpanningTree:
    """Breadth-first tree from ``o``, neighbors taken in label order.

    Every neighbor of ``o`` is discovered from ``o`` itself, so the result
    always contains all edges at ``o``.
    """
    oi = g.idx(o)
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected")
    order, parent = _bfs_order(g.adj, oi)
    return make_tree(g, (_edge(x, parent[x]) for x in order[1:]))


def missing_edges(g: Graph, t_o: SpanningTree, u: str) -> list[str]:
    """Far endpoints of ``L(u)``, the edges at ``u`` not in ``t_o``, ascending."""
    ui = g.idx(u)
    return [g.vertices[x] for x in g.adj[ui] if _edge(ui, x) not in t_o.edges]


def derive_u_tree(
    g: Graph, t_o: SpanningTree, u: str, order: Sequence[str] | None = None
) -> SpanningTree:
    """Swap every edge of ``L(u)`` into ``t_o`` to get a u-spanning tree.

    ``order`` overrides the processing order of the far endpoints (default
    ascending label); the result does not depend on it.
    """
    ui = g.idx(u)
    pending = missing_edges(g, t_o, u)
    if order is not None:
        if sorted(order) != pending:
            raise GraphError(f"order must be a permutation of {pending}")
        pending = list(order)
    edges = set(t_o.edges)
    adj = {x: set(nb) for x, nb in enumerate(t_o.adj)}
    for label in pending:
        x = g.idx(label)
        parent = _bfs_order(adj, ui)[1]
        # last edge of the tree path u ~> x is the one incident to x
        p = parent[x]
        edges.discard(_edge(x, p))
        adj[x].discard(p)
        adj[p].discard(x)
        edges.add(_edge(ui, x))
        adj[x].add(ui)
        adj[ui].add(x)
    return make_tree(g, edges)


def _check_seed(g: Graph, o: str, t_o: SpanningTree) -> None:
    if t_o.host != g:
        raise InvalidSeedError("seed tree belongs to a different graph")
    if len(t_o.edges) != g.n - 1 or not is_connected(Graph.from_indices(g.vertices, t_o.edges)):
        raise InvalidSeedError("seed is not a spanning tree")
    if not is_v_spanning_tree(t_o, o):
        raise InvalidSeedError(f"seed tree does not contain every edge at {o}")


def build_tree_family(g: Graph, o: str, t_o: SpanningTree) -> TreeFamily:
    _check_seed(g, o, t_o)
    trees = {}
    for u in g.vertices:
        t = t_o if u == o else derive_u_tree(g, t_o, u)
        assert is_v_spanning_tree(t, u)
        trees[u] = t
    return TreeFamily(g, o, trees)


def upward_groupoid(f: TreeFamily) -> OperationTable:
    """``u * v`` is the neighbor of ``u`` on the u-v path of ``T_u``."""
    g = f.host
    rows = [f.trees[u].first_steps(i) for i, u in enumerate(g.vertices)]
    return OperationTable(g.vertices, rows)


def downward_groupoid(f: TreeFamily) -> OperationTable:
    """``u * v`` is the neighbor of ``u`` on the u-v path of ``T_v``."""
    g = f.host
    n = g.n
    rows = [[u] * n for u in range(n)]
    for v, label in enumerate(g.vertices):
        parent = f.trees[label].parents(v)
        for u in range(n):
            if u != v:
                rows[u][v] = parent[u]
    return OperationTable(g.vertices, rows)


def family_from_trees(g: Graph, trees: Mapping[str, SpanningTree] | Iterable[SpanningTree]) -> TreeFamily:
    """Family from independently chosen trees (mapping, or one per vertex in order)."""
    if not isinstance(trees, Mapping):
        trees = dict(zip(g.vertices, trees))
    f = TreeFamily(g, None, dict(trees))
    f.validate()
    return f


def construct_smooth(
    g: Graph, o: str | None = None, t_o: SpanningTree | None = None
) -> tuple[TreeFamily, OperationTable]:
    """Run the whole construction; defaults are the smallest label and its BFS tree."""
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected")
    if o is None:
        o = g.vertices[0]
    g.idx(o)
    if t_o is None:
        t_o = default_seed(g, o)
    family = build_tree_family(g, o, t_o)
    return family, upward_groupoid(family)


def branches(t: SpanningTree, u: str) -> list[set[str]]:
    """Components of ``t`` after deleting ``u`` and the tree edges at it."""
    g = t.host
    ui = g.idx(u)
    comp: dict[int, int] = {}
    out: list[set[str]] = []
    for start in range(g.n):
        if start == ui or start in comp:
            continue
        stack = [start]
        comp[start] = len(out)
        members = {g.vertices[start]}
        while stack:
            x = stack.pop()
            for y in t.adj[x]:
                if y != ui and y not in comp:
                    comp[y] = len(out)
                    members.add(g.vertices[y])
                    stack.append(y)
        out.append(members)
    return out


def format_family(f: TreeFamily) -> str:
    """One block per vertex: ``tree <label>`` then its edges, blocks blank-separated."""
    blocks = []
    for v in f.host.vertices:
        lines = [f"tree {v}"] + [f"{a} {b}" for a, b in f.trees[v].labeled_edges()]
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def parse_tree_blocks(text: str) -> dict[str, list[tuple[str, str]]]:
    """Raw ``{label: edges}`` from tree-family text; no graph validation."""
    blocks: dict[str, list[tuple[str, str]]] = {}
    current: list[tuple[str, str]] | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "tree":
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: expected 'tree <label>'")
            if parts[1] in blocks:
                raise ParseError(f"line {lineno}: duplicate block for {parts[1]}")
            current = blocks[parts[1]] = []
        elif len(parts) == 2 and current is not None:
            current.append((parts[0], parts[1]))
        else:
            raise ParseError(f"line {lineno}: malformed tree line {line!r}")
    if not blocks:
        raise ParseError("no tree blocks found")
    return blocks


def parse_family(g: Graph, text: str) -> TreeFamily:
    blocks = parse_tree_blocks(text)
    trees = {v: validate_spanning_tree(g, es) for v, es in blocks.items()}
    return family_from_trees(g, trees)


def parse_seed(g: Graph, text: str) -> tuple[str, SpanningTree]:
    """Single-block seed file: the block label is the root ``o``."""
    blocks = parse_tree_blocks(text)
    if len(blocks) != 1:
        raise ParseError(f"seed file must hold exactly one tree block, got {len(blocks)}")
    (o, es), = blocks.items()
    g.idx(o)
    try:
        t = validate_spanning_tree(g, es)
    except GraphError as exc:
        raise InvalidSeedError(str(exc)) from None
    _check_seed(g, o, t)
    return o, t
