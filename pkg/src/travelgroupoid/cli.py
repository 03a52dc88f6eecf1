"""Command-line front end.

Exit codes: 0 success, 1 verify found a non-smooth or non-travel table,
2 parse error, 3 disconnected graph, 4 invalid seed tree, 5 budget or cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .construction import InvalidSeedError, construct_smooth, format_family, parse_seed
from .graph import (
    DEFAULT_VERTEX_CAP,
    CapExceededError,
    DisconnectedGraphError,
    GraphError,
    ParseError,
    count_v_spanning_trees,
    format_graph,
    is_connected,
    parse_graph,
)
from .groupoid import axiom_report, format_table, parse_table, walk
from .oracle import DEFAULT_BUDGET, BudgetExceededError, census, random_connected_graph

EXIT_FAIL, EXIT_PARSE, EXIT_DISCONNECTED, EXIT_SEED, EXIT_BUDGET = 1, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_PARSE) from None


def _load_graph(path: str):
    try:
        return parse_graph(_read(path))
    except GraphError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from None


def _load_table(path: str):
    try:
        return parse_table(_read(path))
    except GraphError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def cmd_build(args) -> tuple[str, int]:
    g = _load_graph(args.graph)
    if not is_connected(g):
        raise CliError("graph is not connected", EXIT_DISCONNECTED)
    o, t_o = args.root, None
    if args.tree:
        try:
            o_file, t_o = parse_seed(g, _read(args.tree))
        except InvalidSeedError as exc:
            raise CliError(f"{args.tree}: {exc}", EXIT_SEED) from None
        except GraphError as exc:
            # unknown labels or a non-tree edge set also make the seed unusable
            code = EXIT_PARSE if isinstance(exc, ParseError) else EXIT_SEED
            raise CliError(f"{args.tree}: {exc}", code) from None
        if o is not None and o != o_file:
            raise CliError(f"--root {o} disagrees with seed block for {o_file}", EXIT_SEED)
        o = o_file
    if o is not None and o not in g.index:
        raise CliError(f"unknown root {o!r}", EXIT_SEED)
    family, table = construct_smooth(g, o, t_o)
    if args.format == "json":
        out = _dump({
            "root": family.root,
            "trees": {v: [list(e) for e in t.labeled_edges()] for v, t in family.trees.items()},
            "table": {"vertices": list(table.vertices), "rows": table.label_rows()},
        })
    else:
        out = f"root {family.root}\n\n{format_family(family)}\n{format_table(table)}".rstrip("\n")
    if args.table_out:
        Path(args.table_out).write_text(format_table(table))
    return out, 0


def _report_text(rep) -> str:
    lines = [f"{k} {str(v).lower()}" for k, v in rep.flags().items()]
    for name in ("t1", "t2", "t3", "t4"):
        viol = getattr(rep, f"{name}_violations")
        lines.append(f"{name}_violations {len(viol)}")
        lines.extend(f"  {' '.join(w)}" for w in viol)
    lines.append(f"confusing_pairs {len(rep.confusing_pairs)}")
    lines.extend(f"  {u} {v} i={i}" for u, v, i in rep.confusing_pairs)
    return "\n".join(lines)


def cmd_verify(args) -> tuple[str, int]:
    table = _load_table(args.table)
    rep = axiom_report(table)
    out = _dump(rep.to_dict()) if args.format == "json" else _report_text(rep)
    return out, 0 if rep.is_travel and rep.is_smooth else EXIT_FAIL


def cmd_path(args) -> tuple[str, int]:
    table = _load_table(args.table)
    for label in (args.u, args.v):
        if label not in table.index:
            raise CliError(f"unknown vertex {label!r}", EXIT_PARSE)
    w = walk(table, args.u, args.v, args.max_steps)
    if not w.terminated:
        tag = "(no path within bound)"
    else:
        tag = "(path)" if w.is_path else "(walk, not a path)"
    return f"{' '.join(w.sequence)} {tag}", 0


def cmd_count(args) -> tuple[str, int]:
    g = _load_graph(args.graph)
    if not is_connected(g):
        raise CliError("graph is not connected", EXIT_DISCONNECTED)
    try:
        counts = {v: count_v_spanning_trees(g, v, args.cap) for v in g.vertices}
    except CapExceededError as exc:
        raise CliError(str(exc), EXIT_BUDGET) from None
    product = math.prod(counts.values())
    if args.format == "json":
        return _dump({"counts": counts, "product": product}), 0
    lines = [f"{v} {c}" for v, c in counts.items()] + [f"product {product}"]
    return "\n".join(lines), 0


def cmd_enumerate(args) -> tuple[str, int]:
    g = _load_graph(args.graph)
    if not is_connected(g):
        raise CliError("graph is not connected", EXIT_DISCONNECTED)
    try:
        lines, summary = census(g, args.non_confusing_only, args.budget, args.dump)
    except (BudgetExceededError, CapExceededError) as exc:
        raise CliError(str(exc), EXIT_BUDGET) from None
    if args.format == "json":
        return _dump({"tables": lines[:-1], "summary": summary}), 0
    return "\n".join(lines), 0


def cmd_random(args) -> tuple[str, int]:
    return format_graph(random_connected_graph(args.n, args.seed)).rstrip("\n"), 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="travelgroupoid", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("build", help="construct a smooth travel groupoid on a graph")
    sp.add_argument("graph", help="edge-list file")
    sp.add_argument("--root", help="root vertex o (default: smallest label)")
    sp.add_argument("--tree", help="seed o-spanning tree as a single 'tree <o>' block")
    sp.add_argument("--table-out", help="also write the table to this file")
    fmt(sp)
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("verify", help="check the travel groupoid axioms of a table")
    sp.add_argument("table", help="operation-table file")
    fmt(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("path", help="print the walk u, u*v, (u*v)*v, ...")
    sp.add_argument("table")
    sp.add_argument("u")
    sp.add_argument("v")
    sp.add_argument("--max-steps", type=int, default=None)
    sp.set_defaults(func=cmd_path)

    sp = sub.add_parser("count", help="per-vertex v-spanning tree counts and their product")
    sp.add_argument("graph")
    sp.add_argument("--cap", type=int, default=DEFAULT_VERTEX_CAP, help="max vertices for enumeration")
    fmt(sp)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("enumerate", help="list every travel groupoid on a small graph")
    sp.add_argument("graph")
    sp.add_argument("--non-confusing-only", action="store_true")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--dump", action="store_true", help="print full tables")
    fmt(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("random", help="emit a random connected graph as an edge list")
    sp.add_argument("n", type=int)
    sp.add_argument("--seed", type=int, required=True)
    sp.set_defaults(func=cmd_random)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, code = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
