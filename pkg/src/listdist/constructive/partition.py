"""Degree-capped vertex partitions and coloring part by part.

``lovasz_partition`` splits V into parts with Delta(G[V_i]) <= x_i whenever
sum(x_i) >= Delta + 1 - t. Local search: a vertex with more than x_i neighbors
inside its part V_i moves to the first part V_j where it has at most x_j.
Each move lowers sum_i (e(V_i) - x_i |V_i|) by at least one, and starting
with everything in a part of largest cap bounds the number of moves by |E|.

``partition_compose`` colors part i from the i-th block of every list: the
first k_1 entries, then the next k_2 entries after removing those, and so on.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from ..coloring import Coloring, init_k, validate_assignment, verify
from ..errors import CompositionError, ListError, PreconditionError
from ..graph import (Graph, contains_complete_bipartite, induced_subgraph, is_connected,
                     is_cycle_graph, is_k_connected, is_path_graph)
from .brooks import brooks_list_coloring, is_kdd
from .common import all_distinct_coloring, note
from .cycles import color_cycle, color_path, cycle_list_size, path_list_size


@dataclass
class PartitionPlan:
    caps: tuple[int, ...]
    parts: list[list[int]]
    moves: int = 0

    @property
    def t(self) -> int:
        return len(self.caps)

    def part_of(self, n: int) -> list[int]:
        where = [-1] * n
        for i, P in enumerate(self.parts):
            for v in P:
                where[v] = i
        return where

    def internal_max_degree(self, G: Graph) -> list[int]:
        out = []
        for P in self.parts:
            S = set(P)
            out.append(max((len(G.adj[v] & S) for v in P), default=0))
        return out

    def to_dict(self) -> dict:
        return {"caps": list(self.caps), "parts": [sorted(P) for P in self.parts], "moves": self.moves}


def lovasz_partition(G: Graph, caps: Sequence[int]) -> PartitionPlan:
    caps = tuple(int(x) for x in caps)
    t = len(caps)
    if t == 0:
        raise PreconditionError("need at least one part")
    if min(caps) < 0:
        raise PreconditionError(f"caps must be non-negative, got {list(caps)}")
    if sum(caps) < G.max_degree + 1 - t:
        raise PreconditionError(
            f"sum of caps {sum(caps)} < maxdeg + 1 - t = {G.max_degree + 1 - t}")
    start = caps.index(max(caps))
    where = [start] * G.n
    inside = [[0] * t for _ in range(G.n)]  # inside[v][j] = neighbors of v in part j
    for v in range(G.n):
        inside[v][start] = G.degree(v)
    moves = 0
    while True:
        bad = next((v for v in range(G.n) if inside[v][where[v]] > caps[where[v]]), None)
        if bad is None:
            break
        j = next((j for j in range(t) if inside[bad][j] <= caps[j]), None)
        if j is None:  # excluded by the counting argument
            raise CompositionError(f"vertex {bad} has no part to move to")
        i = where[bad]
        where[bad] = j
        for w in G.adj[bad]:
            inside[w][i] -= 1
            inside[w][j] += 1
        moves += 1
        if moves > G.m:
            raise CompositionError(f"local search exceeded |E| = {G.m} moves")
    parts: list[list[int]] = [[] for _ in range(t)]
    for v in range(G.n):
        parts[where[v]].append(v)
    plan = PartitionPlan(caps, parts, moves)
    degs = plan.internal_max_degree(G)
    if any(d > x for d, x in zip(degs, caps)):
        raise CompositionError(f"partition violates caps: {degs} vs {list(caps)}")
    return plan


Solver = Callable[[Graph, Sequence[Sequence[int]]], Coloring]


@dataclass(frozen=True)
class PartSolver:
    """A coloring procedure for one part and the list size it needs."""
    budget: int
    solve: Solver
    name: str = field(default="custom")


def all_distinct_solver(H: Graph) -> PartSolver:
    return PartSolver(H.n, lambda H, L: all_distinct_coloring(H, L), "all-distinct")


def blocks(lst: Sequence[int], budgets: Sequence[int]) -> list[tuple[int, ...]]:
    """Consecutive disjoint blocks of ``lst`` with the given sizes."""
    out, rest = [], list(dict.fromkeys(lst))
    for k in budgets:
        if len(rest) < k:
            raise ListError(f"list {list(lst)} too short for blocks {list(budgets)}")
        b = init_k(rest, k)
        out.append(b)
        rest = rest[k:]
    return out


@dataclass
class ComposeResult:
    coloring: Coloring
    palettes: list[set[int]]
    disjoint: bool
    overlap: list[tuple[int, int, list[int]]]

    def to_dict(self) -> dict:
        return {"coloring": list(self.coloring), "disjoint": self.disjoint,
                "overlap": [[i, j, c] for i, j, c in self.overlap]}


def compose_report(G: Graph, plan: PartitionPlan, L: Sequence[Sequence[int]],
                   solvers: Sequence[PartSolver], trace: list | None = None) -> ComposeResult:
    """Color each part from its block of the lists; no checks on the result."""
    L = validate_assignment(L, G.n)
    if len(solvers) != plan.t:
        raise PreconditionError(f"{len(solvers)} solvers for {plan.t} parts")
    budgets = [s.budget for s in solvers]
    need = sum(budgets)
    short = [v for v in range(G.n) if len(L[v]) < need]
    if short:
        raise ListError(f"lists need {need} colors (sum of part budgets {budgets}); vertex {short[0]} has {len(L[short[0]])}")
    f = [0] * G.n
    palettes: list[set[int]] = []
    for i, (P, s) in enumerate(zip(plan.parts, solvers)):
        if not P:
            palettes.append(set())
            continue
        H, back = induced_subgraph(G, P)
        sub = [blocks(L[v], budgets)[i] for v in back]
        fh = s.solve(H, sub)
        for a, v in enumerate(back):
            f[v] = fh[a]
        palettes.append(set(fh))
        note(trace, step="part", index=i, size=len(P), budget=s.budget, solver=s.name)
    overlap = []
    for i in range(plan.t):
        for j in range(i + 1, plan.t):
            common = palettes[i] & palettes[j]
            if common:
                overlap.append((i, j, sorted(common)))
    return ComposeResult(tuple(f), palettes, not overlap, overlap)


def partition_compose(G: Graph, plan: PartitionPlan, L: Sequence[Sequence[int]],
                      solvers: Sequence[PartSolver], trace: list | None = None) -> Coloring:
    """Compose part colorings; raises CompositionError if two parts share a
    color or the result is not a valid coloring."""
    res = compose_report(G, plan, L, solvers, trace)
    if not res.disjoint:
        raise CompositionError(f"parts share colors: {res.overlap}")
    rep = verify(G, L, res.coloring)
    if not rep.ok:
        raise CompositionError(f"composed coloring is invalid: {rep.to_dict()}")
    return res.coloring


def part_solver(H: Graph, r: int) -> PartSolver:
    """Solver and budget for one part, following the small/sparse/dense split."""
    if H.n < r:
        return all_distinct_solver(H)
    if not is_connected(H):
        raise PreconditionError("large part is disconnected; connectivity hypothesis violated")
    d = H.max_degree
    if is_path_graph(H):
        return PartSolver(path_list_size(H.n), color_path, "path")
    if is_cycle_graph(H):
        return PartSolver(cycle_list_size(H.n), color_cycle, "cycle")
    if is_kdd(H):
        return all_distinct_solver(H)
    return PartSolver(2 * d - 1, brooks_list_coloring, "brooks")


def capped_partition_bound(delta: int, r: int) -> int:
    t = (delta + 1) // r
    return 2 * delta - (3 * t - 2)


def capped_partition_preconditions(G: Graph, r: int) -> list[str]:
    """Names of the violated hypotheses (empty when all hold)."""
    failed = []
    if not 7 <= r <= G.max_degree + 1:
        failed.append(f"r range: need 7 <= r <= maxdeg + 1 = {G.max_degree + 1}, got r = {r}")
        return failed
    k = G.n - r + 1
    if not is_k_connected(G, k):
        failed.append(f"connectivity: graph is not {k}-connected")
    if contains_complete_bipartite(G, r - 1):
        failed.append(f"forbidden subgraph: contains K_{{{r - 1},{r - 1}}}")
    return failed


def capped_partition_coloring(G: Graph, r: int, L: Sequence[Sequence[int]], trace: list | None = None) -> Coloring:
    failed = capped_partition_preconditions(G, r)
    if failed:
        raise PreconditionError("; ".join(failed))
    delta = G.max_degree
    t = (delta + 1) // r
    caps = [r - 1] * (t - 1) + [delta - r * (t - 1)]
    bound = capped_partition_bound(delta, r)
    L = validate_assignment(L, G.n)
    if min(len(x) for x in L) < bound:
        raise ListError(f"lists need at least {bound} colors")
    plan = lovasz_partition(G, caps)
    note(trace, step="partition", t=t, caps=caps, moves=plan.moves)
    solvers = [part_solver(induced_subgraph(G, P)[0], r) for P in plan.parts]
    if sum(s.budget for s in solvers) > bound:
        raise CompositionError(f"part budgets {[s.budget for s in solvers]} exceed {bound}")
    f = partition_compose(G, plan, L, solvers, trace)
    used = len(set(f))
    if used > bound:
        raise CompositionError(f"{used} colors used, bound is {bound}")
    return f
