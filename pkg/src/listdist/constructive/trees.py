"""Rooted trees and unicyclic graphs of girth at least 7.

In a rooted tree, a coloring where every vertex differs from its parent and
from all its siblings is proper and fixed by no nontrivial root-fixing
automorphism. A unicyclic graph is colored cycle first, then each tree hanging
off a cycle vertex with that vertex as root.
"""
from __future__ import annotations

from typing import Mapping, Sequence

from ..coloring import Coloring, validate_assignment
from ..errors import GraphError, ListError, PreconditionError
from ..graph import (Graph, bfs_frame, cycle_order, girth, induced_subgraph, is_tree,
                     is_unicyclic, k_core)
from .common import certify, checked_lists, first_available, note
from .cycles import color_cycle


def rooted_tree_coloring(T: Graph, root: int, L: Sequence[Sequence[int]],
                         extra_forbidden: Mapping[int, Sequence[int]] | None = None,
                         trace: list | None = None) -> Coloring:
    """BFS greedy: each vertex avoids its parent's color, its earlier siblings'
    colors and ``extra_forbidden[v]``; smallest allowed color wins."""
    if not is_tree(T):
        raise GraphError("rooted_tree_coloring needs a tree")
    L = validate_assignment(L, T.n)
    extra = {v: set(c) for v, c in (extra_forbidden or {}).items()}
    fr = bfs_frame(T, root)
    for v in range(T.n):
        need = 1 if v == root else len(fr.siblings(v)) + 2
        have = len(set(L[v]) - extra.get(v, set()))
        if have < need:
            raise ListError(f"vertex {v} needs {need} usable colors, has {have}")
    f = [0] * T.n
    for v in fr.order:
        bad = set(extra.get(v, ()))
        p = fr.parent[v]
        if p is not None:
            bad.add(f[p])
            bad.update(f[s] for s in fr.siblings(v) if fr.rank[s] < fr.rank[v])
        c = first_available(L[v], bad)
        if c is None:
            raise ListError(f"vertex {v} has no usable color")
        f[v] = c
    note(trace, step="tree-greedy", root=root)
    return tuple(f)


def cycle_of(G: Graph) -> list[int]:
    """Vertices of the unique cycle of a unicyclic graph, in cyclic order."""
    core = k_core(G, 2)
    C, back = induced_subgraph(G, core)
    return [back[i] for i in cycle_order(C)]


def unicyclic_coloring(G: Graph, L: Sequence[Sequence[int]], trace: list | None = None) -> Coloring:
    """Proper distinguishing coloring of a unicyclic graph with girth >= 7 and
    maximum degree >= 3 from lists of size maxdeg."""
    if not is_unicyclic(G):
        raise PreconditionError("graph is not connected unicyclic")
    g = girth(G)
    if g < 7:
        raise PreconditionError(f"girth {g} < 7")
    delta = G.max_degree
    if delta < 3:
        raise PreconditionError(f"maximum degree {delta} < 3")
    L = checked_lists(G, L, delta)
    ring = cycle_of(G)
    on_cycle = set(ring)
    C, back = induced_subgraph(G, ring)
    fc = color_cycle(C, [L[v] for v in back])  # uses the first three entries
    f: list[int | None] = [None] * G.n
    for i, v in enumerate(back):
        f[v] = fc[i]
    note(trace, step="cycle", length=len(ring))
    for x in ring:
        tree = _hanging_tree(G, x, on_cycle)
        if len(tree) == 1:
            continue
        T, tb = induced_subgraph(G, tree)
        root = tb.index(x)
        TL = [[f[x]] if u == x else L[u] for u in tb]
        ft = rooted_tree_coloring(T, root, TL)
        for i, u in enumerate(tb):
            f[u] = ft[i]
        note(trace, step="hanging-tree", at=x, size=len(tree))
    return certify(G, L, f, "unicyclic_coloring")  # type: ignore[arg-type]


def _hanging_tree(G: Graph, x: int, on_cycle: set[int]) -> list[int]:
    seen = {x}
    stack = [x]
    while stack:
        u = stack.pop()
        for w in G.adj[u]:
            if w not in seen and w not in on_cycle:
                seen.add(w)
                stack.append(w)
    return sorted(seen)

