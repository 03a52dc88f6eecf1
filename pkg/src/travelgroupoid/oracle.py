"""Brute-force ground truth for small graphs.

Every travel groupoid on a graph has ``u*v`` adjacent to ``u`` for ``u != v``
(from ``u*(u*v) == u*v``), so candidate tables range over
``prod_u deg(u)**(n-1)`` choices. The enumeration backtracks over that space
cell by cell and rejects partial tables as soon as t1 or t2 fails.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Iterator

from .construction import TreeFamily, construct_smooth, downward_groupoid, family_from_trees, upward_groupoid
from .graph import (
    DEFAULT_VERTEX_CAP,
    DisconnectedGraphError,
    Graph,
    GraphError,
    SpanningTree,
    count_v_spanning_trees,
    enumerate_spanning_trees,
    is_connected,
    is_v_spanning_tree,
)
from .groupoid import OperationTable, axiom_report, confusing_exponent, derived_graph, format_table

DEFAULT_BUDGET = 10**7
MAX_GENERATED_N = 7


class BudgetExceededError(GraphError):
    pass


def candidate_space(g: Graph) -> int:
    return math.prod(len(a) ** (g.n - 1) for a in g.adj)


def _travel_rows(g: Graph, on_graph: bool) -> Iterator[tuple[tuple[int, ...], ...]]:
    n, adj = g.n, g.adj
    tab = [[-1] * n for _ in range(n)]
    for u in range(n):
        tab[u][u] = u
    cells = [(u, v) for u in range(n) for v in range(n) if u != v]
    choices = []
    for u, v in cells:
        # on the graph itself, an edge {u, v} forces u*v == v
        choices.append((v,) if on_graph and v in adj[u] else adj[u])

    def ok(u: int, v: int, w: int) -> bool:
        # t1 at (u, v): (u*v)*u == u
        x = tab[w][u]
        if x != -1 and x != u:
            return False
        # t2 at (u, v): (u*v)*v != u; also covers (u, v) as the second cell of t2 at (w, v)
        if tab[w][v] == u:
            return False
        # (u, v) as second cell of t1 at (v, b) whenever v*b == u
        if w != v and u in tab[v]:
            return False
        return True

    def rec(k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if k == len(cells):
            yield tuple(tuple(r) for r in tab)
            return
        u, v = cells[k]
        for w in choices[k]:
            if ok(u, v, w):
                tab[u][v] = w
                yield from rec(k + 1)
                tab[u][v] = -1

    yield from rec(0)


def enumerate_travel_groupoids(
    g: Graph, budget: int = DEFAULT_BUDGET, on_graph: bool = True
) -> list[OperationTable]:
    """All travel groupoids with off-diagonal entries in the neighborhoods.

    With ``on_graph`` (the default) only tables whose derived graph is ``g``
    are kept, i.e. travel groupoids *on* ``g``; otherwise tables on spanning
    subgraphs are listed too.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected")
    size = candidate_space(g)
    if size > budget:
        raise BudgetExceededError(f"candidate space {size} exceeds budget {budget}")
    return [OperationTable(g.vertices, rows) for rows in _travel_rows(g, on_graph)]


def is_non_confusing(t: OperationTable) -> bool:
    n = t.n
    return all(confusing_exponent(t.rows, u, v) is None for u in range(n) for v in range(n))


def enumerate_non_confusing(g: Graph, budget: int = DEFAULT_BUDGET) -> list[OperationTable]:
    return [t for t in enumerate_travel_groupoids(g, budget) if is_non_confusing(t)]


def v_tree_lists(g: Graph, cap: int = DEFAULT_VERTEX_CAP) -> dict[str, list[SpanningTree]]:
    trees = enumerate_spanning_trees(g, cap)
    return {v: [t for t in trees if is_v_spanning_tree(t, v)] for v in g.vertices}


def tree_combinations(g: Graph, cap: int = DEFAULT_VERTEX_CAP) -> Iterator[TreeFamily]:
    """Every family choosing one v-spanning tree per vertex, independently."""
    lists = v_tree_lists(g, cap)
    for combo in itertools.product(*(lists[v] for v in g.vertices)):
        yield TreeFamily(g, None, dict(zip(g.vertices, combo)))


@dataclass
class CountingReport:
    counts: dict[str, int]
    product: int
    enumerated: int
    downward_tables: int
    downward_bijective: bool

    @property
    def match(self) -> bool:
        return self.product == self.enumerated and self.downward_bijective


def verify_counting_theorem(g: Graph, budget: int = DEFAULT_BUDGET) -> CountingReport:
    """Compare the number of non-confusing travel groupoids with prod_v #v-trees.

    Also checks that downward tables over all v-spanning-tree combinations
    hit every enumerated table exactly once.
    """
    counts = {v: count_v_spanning_trees(g, v) for v in g.vertices}
    product = math.prod(counts.values())
    found = enumerate_non_confusing(g, budget)
    found_set = set(found)
    hits: dict[OperationTable, int] = {}
    combos = 0
    for fam in tree_combinations(g):
        combos += 1
        t = downward_groupoid(fam)
        hits[t] = hits.get(t, 0) + 1
    bijective = (
        len(found_set) == len(found)
        and set(hits) == found_set
        and all(c == 1 for c in hits.values())
        and combos == len(found)
    )
    return CountingReport(counts, product, len(found), combos, bijective)


def default_labels(n: int) -> list[str]:
    return [f"v{i}" for i in range(1, n + 1)]


def generate_connected_graphs(n: int) -> Iterator[Graph]:
    """All connected labeled graphs on ``v1..vn``, edge subsets in mask order."""
    if not 1 <= n <= MAX_GENERATED_N:
        raise ValueError(f"n must be between 1 and {MAX_GENERATED_N}")
    labels = default_labels(n)
    pairs = list(itertools.combinations(range(n), 2))
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        edges = [p for k, p in enumerate(pairs) if mask >> k & 1]
        if len(edges) < n - 1:
            continue
        # bitset flood fill is much cheaper than building a Graph first
        nbr = [0] * n
        for i, j in edges:
            nbr[i] |= 1 << j
            nbr[j] |= 1 << i
        reach, frontier = 1, 1
        while frontier:
            new = 0
            for i in range(n):
                if frontier >> i & 1:
                    new |= nbr[i]
            frontier = new & ~reach
            reach |= new
        if reach == full:
            yield Graph.from_indices(labels, edges)


def random_connected_graph(n: int, seed: int) -> Graph:
    """Uniform random spanning tree of K_n (Aldous-Broder) plus each other edge w.p. 1/2."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    labels = default_labels(n)
    tree = set()
    current = rng.randrange(n)
    visited = {current}
    while len(visited) < n:
        nxt = rng.randrange(n - 1)
        nxt += nxt >= current
        if nxt not in visited:
            visited.add(nxt)
            tree.add((min(current, nxt), max(current, nxt)))
        current = nxt
    extra = [p for p in itertools.combinations(range(n), 2) if p not in tree and rng.random() < 0.5]
    return Graph.from_indices(labels, sorted(tree) + extra)


@dataclass
class Witness:
    graph: Graph
    family: TreeFamily
    table: OperationTable
    pair: tuple[str, str]
    detail: dict = field(default_factory=dict)


def find_naive_upward_t2_witness(max_n: int = 6) -> Witness | None:
    """First upward table from independent v-spanning trees that breaks t2."""
    for n in range(1, max_n + 1):
        for g in generate_connected_graphs(n):
            for fam in tree_combinations(g):
                t = upward_groupoid(fam)
                rep = axiom_report(t)
                if rep.t2_violations:
                    u, v = rep.t2_violations[0]
                    return Witness(g, fam, t, (u, v), {"u*v": t.op(u, v)})
    return None


def find_non_simple_construction(max_n: int = 5) -> Witness | None:
    """First output of the seeded construction (any root, any seed) that breaks t3."""
    for n in range(1, max_n + 1):
        for g in generate_connected_graphs(n):
            trees = enumerate_spanning_trees(g)
            for o in g.vertices:
                for t_o in trees:
                    if not is_v_spanning_tree(t_o, o):
                        continue
                    fam, t = construct_smooth(g, o, t_o)
                    rep = axiom_report(t)
                    if rep.t3_violations:
                        u, v = rep.t3_violations[0]
                        return Witness(g, fam, t, (u, v), {"root": o, "v*u": t.op(v, u)})
    return None


def find_confusing_travel_table(max_n: int = 5) -> tuple[Graph, OperationTable, tuple[str, str]] | None:
    """First travel groupoid on a small graph that has a confusing pair."""
    for n in range(1, max_n + 1):
        for g in generate_connected_graphs(n):
            if candidate_space(g) > DEFAULT_BUDGET:
                continue
            for t in enumerate_travel_groupoids(g):
                rep = axiom_report(t)
                if rep.confusing_pairs:
                    u, v, _ = rep.confusing_pairs[0]
                    return g, t, (u, v)
    return None


def census(
    g: Graph, non_confusing_only: bool = False, budget: int = DEFAULT_BUDGET, dump: bool = False
) -> tuple[list[str], dict]:
    """One summary line per enumerated table plus a closing totals line."""
    tables = enumerate_travel_groupoids(g, budget)
    lines = []
    listed = travel = simple = smooth = nonconf = 0
    for t in tables:
        rep = axiom_report(t)
        travel += 1
        simple += rep.is_simple
        smooth += rep.is_smooth
        nonconf += rep.is_non_confusing
        if non_confusing_only and not rep.is_non_confusing:
            continue
        listed += 1
        flags = " ".join(f"{k[3:]}={int(v)}" for k, v in rep.flags().items())
        lines.append(f"{listed} {flags} digest={t.digest()}")
        if dump:
            lines.extend("  " + row for row in format_table(t).splitlines())
    product = math.prod(count_v_spanning_trees(g, v) for v in g.vertices)
    summary = {
        "listed": listed,
        "travel": travel,
        "simple": simple,
        "smooth": smooth,
        "non_confusing": nonconf,
        "product": product,
        "match": nonconf == product,
    }
    lines.append(" ".join(f"{k}={str(v).lower() if isinstance(v, bool) else v}" for k, v in summary.items()))
    return lines, summary
