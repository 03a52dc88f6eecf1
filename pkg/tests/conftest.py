import itertools

import numpy as np
import pytest

from travelgroupoid.graph import Graph, parse_graph
from travelgroupoid.groupoid import OperationTable

# Table 1 of the 3x3 grid example, row u column v holds u*v
TABLE1_ROWS = """\
a_1 a_2 a_2 a_4 a_2 a_2 a_4 a_2 a_2
a_1 a_2 a_3 a_1 a_5 a_3 a_1 a_5 a_3
a_2 a_2 a_3 a_2 a_6 a_6 a_2 a_6 a_6
a_1 a_1 a_1 a_4 a_5 a_1 a_7 a_5 a_1
a_2 a_2 a_6 a_4 a_5 a_6 a_4 a_8 a_6
a_3 a_3 a_3 a_3 a_5 a_6 a_3 a_5 a_9
a_4 a_4 a_4 a_4 a_4 a_4 a_7 a_8 a_4
a_5 a_5 a_5 a_5 a_5 a_5 a_7 a_8 a_9
a_6 a_6 a_6 a_6 a_6 a_6 a_6 a_8 a_9
"""
GRID_LABELS = [f"a_{i}" for i in range(1, 10)]
GRID_EDGES = """\
a_1 a_2
a_2 a_3
a_4 a_5
a_5 a_6
a_7 a_8
a_8 a_9
a_1 a_4
a_4 a_7
a_2 a_5
a_5 a_8
a_3 a_6
a_6 a_9
"""


@pytest.fixture
def table1():
    return OperationTable.from_labels(GRID_LABELS, [r.split() for r in TABLE1_ROWS.splitlines()])


@pytest.fixture
def table1_text():
    return " ".join(GRID_LABELS) + "\n" + TABLE1_ROWS


@pytest.fixture
def grid():
    return parse_graph(GRID_EDGES)


@pytest.fixture
def c4():
    return parse_graph("v1 v2\nv2 v3\nv3 v4\nv4 v1")


@pytest.fixture
def k3():
    return parse_graph("a b\nb c\na c")


def path_graph(n):
    return Graph([f"p{i}" for i in range(n)], [(f"p{i}", f"p{i + 1}") for i in range(n - 1)])


# ---- independent oracles shared by several modules ----

def matrix_tree_count(g):
    """Kirchhoff: any cofactor of the Laplacian counts spanning trees."""
    if g.n == 1:
        return 1
    lap = np.zeros((g.n, g.n))
    for i, j in g.edges:
        lap[i, i] += 1
        lap[j, j] += 1
        lap[i, j] -= 1
        lap[j, i] -= 1
    return int(round(np.linalg.det(lap[1:, 1:])))


def brute_spanning_trees(g):
    """Edge subsets of size n-1 that connect every vertex."""
    out = []
    for combo in itertools.combinations(sorted(g.edges), g.n - 1):
        comp = list(range(g.n))

        def find(x):
            while comp[x] != x:
                x = comp[x]
            return x

        for i, j in combo:
            comp[find(i)] = find(j)
        if len({find(x) for x in range(g.n)}) == 1:
            out.append(frozenset(combo))
    return out


def brute_travel_tables(g, on_graph=True):
    """Filter the full product of neighborhood choices; no pruning at all."""
    n = g.n
    cells = [(u, v) for u in range(n) for v in range(n) if u != v]
    found = []
    for choice in itertools.product(*(g.adj[u] for u, _ in cells)):
        rows = [[u] * n for u in range(n)]
        for (u, v), w in zip(cells, choice):
            rows[u][v] = w
        if any(rows[rows[u][v]][u] != u for u in range(n) for v in range(n)):
            continue
        if any(u != v and rows[rows[u][v]][v] == u for u in range(n) for v in range(n)):
            continue
        if on_graph:
            derived = {(min(u, v), max(u, v)) for u in range(n) for v in range(n) if u != v and rows[u][v] == v}
            if derived != set(g.edges):
                continue
        found.append(tuple(tuple(r) for r in rows))
    return found


def pytest_configure(config):
    config._acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
