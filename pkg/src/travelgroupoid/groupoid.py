"""Finite groupoids given by operation tables, and their axiom checkers.

A table is any total binary operation on a sorted label set; nothing about
the travel axioms is enforced at construction time. The checkers scan every
pair or triple and report explicit witnesses.

Axioms, for all u, v, w:

* t1: ``(u*v)*u == u``
* t2: ``(u*v)*v == u`` implies ``u == v``
* t3 (simple): ``v*u != u`` implies ``u*(v*u) == u*v``
* t4 (smooth): ``u*v == u*w`` implies ``u*(w*v) == u*v``
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, GraphError, ParseError


class PreconditionError(ValueError):
    """A checker was called on a table outside its domain."""


class OperationTable:
    """Immutable n x n table; entry ``[i][j]`` is the index of ``i * j``."""

    __slots__ = ("vertices", "index", "rows", "_hash")

    def __init__(self, vertices: Sequence[str], rows: Sequence[Sequence[int]]):
        vertices = tuple(vertices)
        if not vertices:
            raise GraphError("a groupoid needs a non-empty carrier")
        if list(vertices) != sorted(set(vertices)):
            raise GraphError("vertex labels must be distinct and sorted")
        n = len(vertices)
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise GraphError(f"table must be {n}x{n}")
        for r in rows:
            for x in r:
                if not 0 <= x < n:
                    raise GraphError(f"table entry {x} out of range")
        self.vertices: tuple[str, ...] = vertices
        self.index = {v: i for i, v in enumerate(vertices)}
        self.rows: tuple[tuple[int, ...], ...] = rows
        self._hash = hash((vertices, rows))

    @classmethod
    def from_labels(cls, vertices: Sequence[str], rows: Sequence[Sequence[str]]) -> "OperationTable":
        vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        try:
            return cls(vertices, [[index[x] for x in r] for r in rows])
        except KeyError as exc:
            raise GraphError(f"unknown vertex {exc.args[0]!r} in table") from None

    @property
    def n(self) -> int:
        return len(self.vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OperationTable):
            return NotImplemented
        return self.vertices == other.vertices and self.rows == other.rows

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"OperationTable({list(self.vertices)}, {self.label_rows()})"

    def idx(self, label: str) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise GraphError(f"unknown vertex {label!r}") from None

    def op(self, u: str, v: str) -> str:
        """The product ``u * v`` on labels."""
        return self.vertices[self.rows[self.idx(u)][self.idx(v)]]

    def label_rows(self) -> list[list[str]]:
        return [[self.vertices[x] for x in r] for r in self.rows]

    def digest(self) -> str:
        return hashlib.sha256(format_table(self).encode()).hexdigest()[:12]


def parse_table(text: str) -> OperationTable:
    """Read a header line of sorted labels followed by n rows of n labels."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append((lineno, line.split()))
    if not lines:
        raise ParseError("empty table")
    header = lines[0][1]
    n = len(header)
    if header != sorted(set(header)):
        raise ParseError(f"line {lines[0][0]}: header labels must be distinct and sorted")
    if len(lines) != n + 1:
        raise ParseError(f"expected {n} table rows, got {len(lines) - 1}")
    known = set(header)
    rows = []
    for lineno, row in lines[1:]:
        if len(row) != n:
            raise ParseError(f"line {lineno}: expected {n} entries, got {len(row)}")
        bad = [x for x in row if x not in known]
        if bad:
            raise ParseError(f"line {lineno}: unknown label {bad[0]!r}")
        rows.append(row)
    return OperationTable.from_labels(header, rows)


def format_table(t: OperationTable) -> str:
    width = max(len(v) for v in t.vertices)
    lines = [" ".join(v.ljust(width) for v in t.vertices).rstrip()]
    for row in t.label_rows():
        lines.append(" ".join(x.ljust(width) for x in row).rstrip())
    return "\n".join(lines) + "\n"


def derived_graph(t: OperationTable) -> Graph:
    """Graph whose edges are the pairs {u, v} with ``u != u*v == v``."""
    rows = t.rows
    edges = [(i, j) for i in range(t.n) for j in range(t.n) if i != j and rows[i][j] == j]
    return Graph.from_indices(t.vertices, edges)


def _iterate(rows, u: int, v: int, i: int) -> int:
    x = u
    for _ in range(i):
        x = rows[x][v]
    return x


def iterate(t: OperationTable, u: str, v: str, i: int) -> str:
    """``u *^i v`` where ``u *^0 v = u`` and ``u *^(i+1) v = (u *^i v) * v``."""
    if i < 0:
        raise ValueError("exponent must be non-negative")
    return t.vertices[_iterate(t.rows, t.idx(u), t.idx(v), i)]


@dataclass(frozen=True)
class Walk:
    source: str
    target: str
    sequence: tuple[str, ...]
    terminated: bool
    is_path: bool

    @property
    def steps(self) -> int:
        return len(self.sequence) - 1


def _walk(rows, u: int, v: int, max_steps: int) -> tuple[list[int], bool]:
    seq = [u]
    while seq[-1] != v and len(seq) <= max_steps:
        seq.append(rows[seq[-1]][v])
    return seq, seq[-1] == v


def walk(t: OperationTable, u: str, v: str, max_steps: int | None = None) -> Walk:
    """Follow ``u *^i v`` until ``v`` is reached or ``max_steps`` products are taken."""
    if max_steps is None:
        max_steps = t.n
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    seq, done = _walk(t.rows, t.idx(u), t.idx(v), max_steps)
    labels = tuple(t.vertices[x] for x in seq)
    return Walk(u, v, labels, done, len(set(seq)) == len(seq))


def confusing_exponent(rows, u: int, v: int) -> int | None:
    """Smallest ``i >= 3`` with ``u *^i v == u``, or None.

    Since ``u *^0 v = u``, u can only recur if the orbit of right
    multiplication by v is purely periodic, with period at most n; the first
    return at ``i >= 3`` therefore lies within ``n + 2`` steps, and ``n*n + 3``
    is a safe uniform bound.
    """
    if u == v:
        return None
    x = u
    for i in range(1, len(rows) ** 2 + 4):
        nxt = rows[x][v]
        if nxt == x:
            # fixed point; x == u here means u * v == u, so u *^3 v == u
            return 3 if x == u else None
        x = nxt
        if x == u and i >= 3:
            return i
    return None


@dataclass
class AxiomReport:
    vertices: tuple[str, ...]
    t1_violations: list[tuple[str, str]] = field(default_factory=list)
    t2_violations: list[tuple[str, str]] = field(default_factory=list)
    t3_violations: list[tuple[str, str]] = field(default_factory=list)
    t4_violations: list[tuple[str, str, str]] = field(default_factory=list)
    confusing_pairs: list[tuple[str, str, int]] = field(default_factory=list)

    @property
    def is_travel(self) -> bool:
        return not self.t1_violations and not self.t2_violations

    @property
    def is_simple(self) -> bool:
        return not self.t3_violations

    @property
    def is_smooth(self) -> bool:
        return not self.t4_violations

    @property
    def is_non_confusing(self) -> bool:
        return not self.confusing_pairs

    def flags(self) -> dict[str, bool]:
        return {
            "is_travel": self.is_travel,
            "is_simple": self.is_simple,
            "is_smooth": self.is_smooth,
            "is_non_confusing": self.is_non_confusing,
        }

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "flags": self.flags(),
            "violations": {
                "t1": [list(p) for p in self.t1_violations],
                "t2": [list(p) for p in self.t2_violations],
                "t3": [list(p) for p in self.t3_violations],
                "t4": [list(p) for p in self.t4_violations],
            },
            "confusing_pairs": [
                {"pair": [u, v], "exponent": i} for u, v, i in self.confusing_pairs
            ],
        }


def axiom_report(t: OperationTable) -> AxiomReport:
    """Exhaustively scan t1-t4 and confusing pairs; witnesses come sorted."""
    rows, lab, n = t.rows, t.vertices, t.n
    rep = AxiomReport(t.vertices)
    for u in range(n):
        ru = rows[u]
        for v in range(n):
            uv = ru[v]
            if rows[uv][u] != u:
                rep.t1_violations.append((lab[u], lab[v]))
            if u != v and rows[uv][v] == u:
                rep.t2_violations.append((lab[u], lab[v]))
            vu = rows[v][u]
            if vu != u and ru[vu] != uv:
                rep.t3_violations.append((lab[u], lab[v]))
            for w in range(n):
                if ru[w] == uv and ru[rows[w][v]] != uv:
                    rep.t4_violations.append((lab[u], lab[v], lab[w]))
            i = confusing_exponent(rows, u, v)
            if i is not None:
                rep.confusing_pairs.append((lab[u], lab[v], i))
    # a smooth travel groupoid is non-confusing; anything else is a checker bug
    if rep.is_travel and rep.is_smooth:
        assert rep.is_non_confusing, "smooth travel table reported confusing"
    return rep


def _require_travel(t: OperationTable) -> AxiomReport:
    rep = axiom_report(t)
    if not rep.is_travel:
        raise PreconditionError("table does not satisfy t1 and t2")
    return rep


def prop1_check(t: OperationTable) -> list[tuple[str, tuple[str, ...]]]:
    """Consequences of t1+t2 that must hold on every travel table.

    Returns ``(item, witness)`` entries for items:
    ``"1"`` u*u == u; ``"2"`` u*v == v iff v*u == u;
    ``"3"`` u*v == u iff u == v; ``"4"`` u*(u*v) == u*v.
    """
    _require_travel(t)
    rows, lab, n = t.rows, t.vertices, t.n
    out = []
    for u in range(n):
        if rows[u][u] != u:
            out.append(("1", (lab[u],)))
        for v in range(n):
            if (rows[u][v] == v) != (rows[v][u] == u):
                out.append(("2", (lab[u], lab[v])))
            if (rows[u][v] == u) != (u == v):
                out.append(("3", (lab[u], lab[v])))
            if rows[u][rows[u][v]] != rows[u][v]:
                out.append(("4", (lab[u], lab[v])))
    return out


def prop2_check(t: OperationTable) -> list[tuple[str, str, int]]:
    """Path reversal on simple travel tables.

    For x != y with first hitting time k (``x *^(k-1) y != y == x *^k y``),
    checks ``y *^(k-1) x != x`` and ``y *^j x == x *^(k-j) y`` for 0 <= j <= k.
    Violations are ``(x, y, j)`` with ``j = -1`` for the first condition.
    """
    rep = _require_travel(t)
    if not rep.is_simple:
        raise PreconditionError("table does not satisfy t3")
    rows, lab, n = t.rows, t.vertices, t.n
    out = []
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            fwd, done = _walk(rows, x, y, n * n)
            if not done:
                continue
            k = len(fwd) - 1
            back = [y]
            for _ in range(k):
                back.append(rows[back[-1]][x])
            if back[k - 1] == x:
                out.append((lab[x], lab[y], -1))
            for j in range(k + 1):
                if back[j] != fwd[k - j]:
                    out.append((lab[x], lab[y], j))
    return out


def fiber(t: OperationTable, u: str, v: str) -> set[str]:
    """``{w : u * w == v}``."""
    ui, vi = t.idx(u), t.idx(v)
    return {t.vertices[w] for w in range(t.n) if t.rows[ui][w] == vi}


def is_closed(t: OperationTable, subset: set[str]) -> bool:
    members = {t.idx(x) for x in subset}
    return all(t.rows[a][b] in members for a in members for b in members)


def smooth_via_fibers(t: OperationTable) -> bool:
    """Smoothness decided by closure of every non-empty fiber under ``*``."""
    _require_travel(t)
    rows, n = t.rows, t.n
    for u in range(n):
        fibers: dict[int, list[int]] = {}
        for w in range(n):
            fibers.setdefault(rows[u][w], []).append(w)
        for members in fibers.values():
            s = set(members)
            for a in members:
                for b in members:
                    if rows[a][b] not in s:
                        return False
    return True
