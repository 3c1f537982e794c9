"""Proper distinguishing coloring from lists of size 2*maxdeg - 1.

The root v is a maximum-degree vertex; v and its neighbors get pairwise
distinct colors, the rest is colored along a BFS tree avoiding the root color
when possible. A vertex x != v *has the star property* when it carries the
root color and its neighbors carry exactly the root's neighbor palette; a
repair loop removes it from every such vertex so that any color-preserving
automorphism must fix v, and then the BFS structure pins everything else.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..coloring import Coloring, init_k, is_proper
from ..errors import InternalInconsistency, PreconditionError, RepairWatchdogError
from ..graph import BfsFrame, Graph, bfs_frame, is_complete_bipartite, is_connected
from .common import certify, checked_lists, first_available, note


@dataclass(frozen=True)
class StarState:
    root: int
    root_color: int
    palette: frozenset[int]

    def __post_init__(self):
        if self.root_color in self.palette:
            raise InternalInconsistency("root color inside its own neighbor palette")


def is_kdd(G: Graph) -> bool:
    """``G`` is K_{d,d} with d the maximum degree."""
    d = G.max_degree
    return G.n == 2 * d and G.m == d * d and is_complete_bipartite(G)


def check_brooks_preconditions(G: Graph) -> None:
    if not is_connected(G):
        raise PreconditionError("graph is not connected")
    if G.max_degree < 3:
        raise PreconditionError(f"maximum degree {G.max_degree} < 3")
    if is_kdd(G):
        raise PreconditionError(f"graph is K_{{{G.max_degree},{G.max_degree}}}")


def _has_star(G: Graph, f: Sequence[int], x: int, st: StarState) -> bool:
    if x == st.root or f[x] != st.root_color:
        return False
    return {f[u] for u in G.adj[x]} == st.palette and G.degree(x) == len(st.palette)


def _star_vertices(G: Graph, f, st: StarState, fr: BfsFrame) -> list[int]:
    return [x for x in fr.order if _has_star(G, f, x, st)]


def brooks_list_coloring(G: Graph, L: Sequence[Sequence[int]], trace: list | None = None,
                         max_passes: int | None = None) -> Coloring:
    check_brooks_preconditions(G)
    delta = G.max_degree
    k = 2 * delta - 1
    L = checked_lists(G, L, k)
    L = tuple(init_k(row, k) for row in L)
    v = min(u for u in range(G.n) if G.degree(u) == delta)
    fr = bfs_frame(G, v)
    col, st = initial_coloring(G, L, fr, trace)
    limit = max_passes if max_passes is not None else 2 * G.n
    passes = 0
    while True:
        stars = _star_vertices(G, col, st, fr)
        if not stars:
            break
        passes += 1
        if passes > limit:
            raise RepairWatchdogError(f"repair loop exceeded {limit} passes; star vertices {stars}")
        x = stars[0]
        _repair(G, L, col, x, st, fr, trace)
        if not is_proper(G, col):
            raise InternalInconsistency(f"repair at {x} broke properness")
        if _has_star(G, col, x, st):
            raise InternalInconsistency(f"repair at {x} left the star property")
        bad = [y for y in _star_vertices(G, col, st, fr) if fr.rank[y] < fr.rank[x]]
        if bad:
            raise InternalInconsistency(f"repair at {x} created the star property at earlier {bad}")
    note(trace, step="done", repairs=passes)
    return certify(G, L, col, "brooks_list_coloring")


def initial_coloring(G: Graph, L, fr: BfsFrame, trace: list | None = None
                     ) -> tuple[list[int], StarState]:
    """First pass: distinct colors on the closed root neighborhood, then BFS
    order avoiding the root color, earlier siblings and earlier neighbors."""
    v = fr.root
    f: list[int | None] = [None] * G.n
    used: set[int] = set()
    for u in sorted({v} | G.adj[v]):
        c = first_available(L[u], used)
        if c is None:
            raise InternalInconsistency("base palette ran out of colors")
        f[u] = c
        used.add(c)
    st = StarState(v, f[v], frozenset(f[u] for u in G.adj[v]))  # type: ignore[arg-type]
    note(trace, step="base", root=v, root_color=st.root_color, palette=sorted(st.palette))
    for x in fr.order:
        if f[x] is not None:
            continue
        earlier = [y for y in fr.siblings(x) if fr.rank[y] < fr.rank[x]]
        earlier += [y for y in G.adj[x] if fr.rank[y] < fr.rank[x]]
        A = set(L[x]) - {st.root_color} - {f[y] for y in earlier}
        if A:
            f[x] = min(A)
            continue
        _assert_forced(G, L, f, x, st, fr)
        f[x] = st.root_color
        note(trace, step="forced-root-color", vertex=x)
    return f, st  # type: ignore[return-value]


def _assert_forced(G, L, f, x, st: StarState, fr: BfsFrame) -> None:
    """Conditions that must hold when x is forced onto the root color."""
    delta = G.max_degree
    S, N = set(fr.siblings(x)), set(G.adj[x])
    checks = {
        "root color in L(x)": st.root_color in L[x],
        "siblings and neighbors all earlier": all(fr.rank[y] < fr.rank[x] for y in S | N),
        "sizes": len(S) == delta - 2 and len(N) == delta,
        "siblings not adjacent": not (S & N),
        "their colors lie in L(x)": all(f[y] in L[x] for y in S | N),
    }
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        raise InternalInconsistency(f"vertex {x} forced onto the root color but fails {failed}")


def _repair(G: Graph, L, f: list[int], x: int, st: StarState, fr: BfsFrame, trace) -> None:
    sibs = sorted(fr.siblings(x))
    w = next((s for s in sibs if G.degree(s) != G.degree(x)), None)
    if w is not None:
        f[x] = f[w]
        note(trace, step="repair", case="sibling-degree", vertex=x, sibling=w)
        return
    w = next((s for s in sibs if G.adj[s] != G.adj[x]), None)
    if w is not None:
        f[x] = f[w]
        note(trace, step="repair", case="sibling-neighbourhood", vertex=x, sibling=w)
        return
    cv = st.root_color

    def marked(z: int) -> bool:
        p = fr.parent[z]
        return any(f[s] == cv for s in fr.siblings(z)) or (p is not None and f[p] == cv)

    z = next((z for z in sorted(G.adj[x]) if not marked(z)), None)
    if z is not None:
        old = f[z]
        if cv not in L[z]:
            block = {f[u] for u in G.adj[z]} | {f[s] for s in fr.siblings(z)} | {old}
            c = first_available(L[z], block)
            if c is None:
                raise InternalInconsistency(f"no spare color at {z} (unmarked neighbor, root color absent)")
            f[z], f[x] = c, old
            note(trace, step="repair", case="unmarked-neighbour-spare", vertex=x, z=z, color=c)
        else:
            f[x], f[z] = old, cv
            note(trace, step="repair", case="unmarked-neighbour-root-color", vertex=x, z=z)
        return
    z = next((z for z in sorted(G.adj[x]) if fr.parent[z] != st.root), None)
    if z is None:
        raise InternalInconsistency("every neighbor of a star vertex is a root child: graph is K_{d,d}")
    old = f[z]
    block = {f[u] for u in G.adj[z]} | {f[s] for s in fr.siblings(z)} | {old}
    c = first_available(L[z], block)
    if c is None:
        raise InternalInconsistency(f"no spare color at {z} (marked neighbors)")
    f[x], f[z] = old, c
    note(trace, step="repair", case="non-root-child-neighbour", vertex=x, z=z, color=c)
