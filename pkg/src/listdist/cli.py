"""Command-line front end.

Every command prints one JSON document on stdout. Errors print
``{"error": ..., "message": ...}`` on stderr and exit with 1 (rejected input,
failed verification) or 2 (usage, unreadable files).
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Any, Callable, Sequence

from . import __version__, generators, io, oracles
from .coloring import verify
from .constructive import (brooks_list_coloring, capped_partition_coloring, col_dl_coloring,
                           color_cycle, color_path, join_compose, prime_power_recolor,
                           unicyclic_coloring)
from .errors import ListDistError
from .families import book_coloring, friendship_coloring, table2_rows
from .graph import Graph, girth, join
from .symmetry import automorphisms, find_isomorphism

INVARIANTS = ("chi", "chi-d", "d", "d-l", "chi-l", "chi-dl", "col", "aut-order", "girth")
METHODS = ("brooks", "cycle", "path", "unicyclic", "partition", "col-dl", "prime-power",
           "join", "book", "friendship")


class UsageError(Exception):
    pass


def _dump(obj: Any) -> str:
    return json.dumps(obj, sort_keys=False, separators=(", ", ": "))


def _limits(args) -> oracles.EnumLimits:
    kw: dict[str, Any] = {"seed": args.seed}
    if getattr(args, "budget", None) is not None:
        kw["exhaustive_budget"] = args.budget
    if getattr(args, "max_vertices", None) is not None:
        kw["max_vertices"] = args.max_vertices
    return oracles.EnumLimits(**kw)


def _load(path: str, what: str) -> Any:
    try:
        return io.load_json(path)
    except OSError as exc:
        raise UsageError(f"cannot read {what} file {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what} file {path} is not valid JSON: {exc}") from exc


def _graph(args) -> Graph:
    if not args.graph:
        raise UsageError("--graph is required")
    return io.graph_from_dict(_load(args.graph, "graph"))


# -- gen ----------------------------------------------------------------------


def cmd_gen(args) -> dict | str:
    arity = generators.ARITY[args.family]
    if len(args.params) != arity:
        raise UsageError(f"{args.family} takes {arity} parameter(s), got {len(args.params)}")
    G = generators.gen_family(args.family, *args.params)
    if args.format == "dot":
        return io.graph_to_dot(G)
    return io.graph_to_dict(G)


# -- invariant --------------------------------------------------------------------


def cmd_invariant(args) -> dict:
    G = _graph(args)
    lim = _limits(args)
    name = args.name
    out: dict[str, Any] = {"invariant": name, "n": G.n}
    if name == "chi":
        out["value"] = oracles.chromatic_number(G, lim)
    elif name == "chi-d":
        out["value"] = oracles.chi_d(G, lim)
    elif name == "d":
        out["value"] = oracles.distinguishing_number(G, lim)
    elif name in ("d-l", "chi-l", "chi-dl"):
        fn = {"d-l": oracles.d_l_bounds, "chi-l": oracles.chi_l_bounds,
              "chi-dl": oracles.chi_dl_bounds}[name]
        cert = fn(G, lim)
        out.update(cert.to_dict())
        out["invariant"] = name
        out["value"] = cert.value
    elif name == "col":
        col, order = oracles.coloring_number(G)
        out["value"], out["ordering"] = col, order
    elif name == "aut-order":
        out["value"] = len(automorphisms(G, lim.max_vertices))
    elif name == "girth":
        g = girth(G)
        out["value"] = None if math.isinf(g) else int(g)
    return out


# -- color ------------------------------------------------------------------------


def _family_coloring(G: Graph, L, family: str, trace: list):
    fam = oracles.recognize_family(G)
    if not fam or fam[0] != family:
        raise ListDistError(f"graph is not a {family} graph")
    n = fam[1]
    model = generators.book(n) if family == "book" else generators.friendship(n)
    p = find_isomorphism(model, G)  # model vertex i -> G vertex p[i]
    if p is None:
        raise ListDistError(f"graph is not isomorphic to the generated {family} graph")
    solve = book_coloring if family == "book" else friendship_coloring
    fm = solve(n, [L[p[i]] for i in range(model.n)], trace)
    f = [0] * G.n
    for i, c in enumerate(fm):
        f[p[i]] = c
    trace.append({"step": "relabel", "family": family, "n": n})
    return tuple(f)


def cmd_color(args) -> dict:
    lim = _limits(args)
    trace: list = []
    if args.method == "join":
        if not args.part or len(args.part) < 2:
            raise UsageError("join needs at least two --part files")
        parts = [io.graph_from_dict(_load(p, "graph")) for p in args.part]
        G = join(parts)
    else:
        G = _graph(args)
    L = io.assignment_from_json(_load(args.lists, "lists"), G.n)
    m = args.method
    solvers: dict[str, Callable[[], Sequence[int]]] = {
        "brooks": lambda: brooks_list_coloring(G, L, trace),
        "cycle": lambda: color_cycle(G, L, trace),
        "path": lambda: color_path(G, L, trace),
        "unicyclic": lambda: unicyclic_coloring(G, L, trace),
        "partition": lambda: capped_partition_coloring(G, _need_r(args), L, trace),
        "col-dl": lambda: col_dl_coloring(G, L, lim, trace),
        "prime-power": lambda: prime_power_recolor(G, L, lim, trace),
        "join": lambda: join_compose(parts, L, limits=lim, trace=trace),
        "book": lambda: _family_coloring(G, L, "book", trace),
        "friendship": lambda: _family_coloring(G, L, "friendship", trace),
    }
    f = solvers[m]()
    rep = verify(G, L, f, max(lim.max_vertices, G.n))
    if not rep.ok:
        raise ListDistError(f"{m} produced an invalid coloring: {rep.to_dict()}")
    return {"method": m, "coloring": list(f), "colors_used": len(set(f)),
            "verified": True, "trace": trace}


def _need_r(args) -> int:
    if args.r is None:
        raise UsageError("the partition method needs --r")
    return args.r


# -- verify / badlist ---------------------------------------------------------------


class VerificationFailed(ListDistError):
    def __init__(self, report: dict):
        super().__init__("coloring failed verification")
        self.report = report


def cmd_verify(args) -> dict:
    G = _graph(args)
    L = io.assignment_from_json(_load(args.lists, "lists"), G.n)
    f = io.coloring_from_json(_load(args.coloring, "coloring"), G.n)
    rep = verify(G, L, f, max(args.max_vertices or 0, G.n, 64))
    if not rep.ok:
        raise VerificationFailed(rep.to_dict())
    return rep.to_dict()


def cmd_badlist(args) -> dict:
    G = _graph(args)
    res = oracles.find_bad_assignment(G, args.k, args.predicate, _limits(args))
    out: dict[str, Any] = {"k": args.k, "predicate": args.predicate, "checked": res.checked}
    if res.assignment is None:
        out["status"] = "none found"
        out["complete"] = res.complete
    else:
        out["status"] = "found"
        out["method"] = res.method
        out["assignment"] = io.assignment_to_json(res.assignment)
    return out


# -- table ---------------------------------------------------------------------------


def table1(max_n: int, lim: oracles.EnumLimits) -> list[dict]:
    expected_path = lambda n: 2 if n % 2 == 0 else 3  # noqa: E731
    expected_cycle = lambda n: 4 if n in (4, 6) else 3  # noqa: E731
    rows = []
    for n in range(2, max_n + 1):
        cert = oracles.chi_dl_bounds(generators.path(n), lim)
        rows.append(_row(f"P_{n}", expected_path(n), cert))
    for n in range(3, max_n + 1):
        cert = oracles.chi_dl_bounds(generators.cycle(n), lim)
        rows.append(_row(f"C_{n}", expected_cycle(n), cert))
    return rows


def _row(name: str, expected: int, cert) -> dict:
    return {"graph": name, "expected": expected, "lower": cert.lower, "upper": cert.upper,
            "exact": cert.exact, "status": "AGREE" if cert.value == expected else "DISAGREE"}


def table2(max_n: int, lim: oracles.EnumLimits, brute_max: int) -> list[dict]:
    rows = []
    for r in table2_rows(max_n):
        n = r["n"]
        G = generators.book(n) if r["graph"] == "book" else generators.friendship(n)
        row = dict(r)
        row["graph"] = f"{'B' if r['graph'] == 'book' else 'F'}_{n}"
        if n <= brute_max:
            bf = oracles.chi_d(G, lim)
            row["chi_d_brute_force"] = bf
            row["status"] = "AGREE" if bf == r["chi_d"] else "DISAGREE"
        else:
            row["status"] = "FORMULA"
        rows.append(row)
    return rows


def cmd_table(args) -> dict:
    lim = _limits(args)
    if args.which == "1":
        rows = table1(args.max_n, lim)
    else:
        rows = table2(args.max_n, lim, args.brute_max)
    agree = all(r["status"] != "DISAGREE" for r in rows)
    return {"table": int(args.which), "rows": rows, "all_agree": agree}


# -- parser -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="listdist",
        description="Proper distinguishing list colorings of small graphs.",
        epilog="Randomized steps are seeded with --seed (default 0); output is deterministic.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for sampled assignments (default 0)")
    common.add_argument("--max-vertices", type=int, default=None,
                        help="vertex bound for exact searches (default 64)")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate a family member")
    g.add_argument("family", choices=generators.FAMILIES)
    g.add_argument("params", nargs="*", type=int)
    g.add_argument("--format", choices=("json", "dot"), default="json")
    g.set_defaults(func=cmd_gen)

    i = sub.add_parser("invariant", parents=[common], help="compute an invariant")
    i.add_argument("name", choices=INVARIANTS)
    i.add_argument("--graph", required=True)
    i.add_argument("--budget", type=int, default=None, help="assignments scanned per k")
    i.set_defaults(func=cmd_invariant)

    c = sub.add_parser("color", parents=[common], help="run a constructive coloring")
    c.add_argument("method", choices=METHODS)
    c.add_argument("--graph")
    c.add_argument("--part", action="append", help="join parts (repeat)")
    c.add_argument("--lists", required=True)
    c.add_argument("--r", type=int, default=None, help="part-size parameter of the partition method")
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", parents=[common], help="check a coloring")
    v.add_argument("--graph", required=True)
    v.add_argument("--lists", required=True)
    v.add_argument("--coloring", required=True)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("badlist", parents=[common], help="search for a k-list assignment with no coloring")
    b.add_argument("--graph", required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--budget", type=int, default=None, help="assignments scanned")
    b.add_argument("--predicate", choices=oracles.PREDICATES, default="proper_distinguishing")
    b.set_defaults(func=cmd_badlist)

    t = sub.add_parser("table", parents=[common], help="recompute a reference table")
    t.add_argument("which", choices=("1", "2"))
    t.add_argument("--max-n", type=int, default=8)
    t.add_argument("--brute-max", type=int, default=4,
                   help="table 2: brute-force chi_D up to this n")
    t.add_argument("--budget", type=int, default=None)
    t.set_defaults(func=cmd_table)
    return p


def _fail(kind: str, message: str, code: int, extra: dict | None = None) -> int:
    err = {"error": kind, "message": message}
    if extra:
        err.update(extra)
    print(_dump(err), file=sys.stderr)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except UsageError as exc:
        return _fail("usage", str(exc), 2)
    except VerificationFailed as exc:
        print(_dump(exc.report))
        return _fail("verification", str(exc), 1, {"report": exc.report})
    except (ListDistError, ValueError) as exc:
        return _fail(type(exc).__name__, str(exc), 1)
    sys.stdout.write(out if isinstance(out, str) else _dump(out) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
