"""List colorings of paths and cycles at the exact list sizes

    P_1: 1, P_even: 2, P_odd: 3, C_3: 3, C_4: 4, C_5: 3, C_6: 4, C_n (n >= 7): 3.

Lists longer than that are truncated to their first entries first.
"""
from __future__ import annotations

from typing import Sequence

from ..coloring import Coloring, init_k, is_distinguishing, is_identical
from ..errors import GraphError, InternalInconsistency
from ..graph import Graph, cycle_order, is_cycle_graph, is_path_graph, path_order
from .common import certify, checked_lists, first_available, note


def path_list_size(n: int) -> int:
    return 1 if n == 1 else 2 if n % 2 == 0 else 3


def cycle_list_size(n: int) -> int:
    return 4 if n in (4, 6) else 3


def color_path(G: Graph, L: Sequence[Sequence[int]], trace: list | None = None) -> Coloring:
    """Greedy from the smaller-id endpoint; on odd paths, if the reflection
    survives, the last vertex takes another color."""
    if not is_path_graph(G):
        raise GraphError("color_path needs a path")
    k = path_list_size(G.n)
    L = checked_lists(G, L, k)
    L = tuple(init_k(row, k) for row in L)
    order = path_order(G)
    f = [0] * G.n
    prev = None
    for v in order:
        c = first_available(L[v], () if prev is None else (prev,))
        if c is None:
            raise InternalInconsistency("path greedy stuck")
        f[v] = c
        prev = c
    note(trace, step="greedy", order=order)
    if G.n % 2 == 1 and G.n > 1 and all(f[order[i]] == f[order[-1 - i]] for i in range(G.n)):
        last, before = order[-1], order[-2]
        c = first_available(L[last], (f[last], f[before]))
        if c is None:
            raise InternalInconsistency("no alternative color for the last path vertex")
        f[last] = c
        note(trace, step="break-reflection", vertex=last, color=c)
    return certify(G, L, f, "color_path")


def _identical_pattern(n: int, colors: Sequence[int]) -> list[int]:
    a, b, c = colors[:3]
    if n == 3:
        return [a, b, c]
    if n == 4:
        return list(colors[:4])
    if n == 6:
        return [a, b, a, b, c, colors[3]]
    if n % 2 == 1:
        return [a if i % 2 == 0 else b for i in range(n - 1)] + [c]
    return [c, a, b, c] + [a if i % 2 == 0 else b for i in range(n - 4)]


def color_cycle(G: Graph, L: Sequence[Sequence[int]], trace: list | None = None) -> Coloring:
    """Proper distinguishing coloring of a cycle from lists of the exact size."""
    if not is_cycle_graph(G):
        raise GraphError("color_cycle needs a cycle")
    n = G.n
    k = cycle_list_size(n)
    L = checked_lists(G, L, k)
    L = tuple(init_k(row, k) for row in L)
    if is_identical(L):
        order = cycle_order(G)
        pattern = _identical_pattern(n, sorted(L[0]))
        f = [0] * n
        for v, c in zip(order, pattern):
            f[v] = c
        note(trace, step="identical-pattern", order=order)
        return certify(G, L, f, "color_cycle")
    if n in (3, 4):
        f = [0] * n
        used: set[int] = set()
        for v in cycle_order(G):
            f[v] = first_available(L[v], used)  # type: ignore[assignment]
            used.add(f[v])
        note(trace, step="all-distinct")
        return certify(G, L, f, "color_cycle")
    if n in (5, 6):
        return certify(G, L, _small_cycle(G, L, trace), "color_cycle")
    return certify(G, L, _long_cycle(G, L, trace), "color_cycle")


def _small_cycle(G: Graph, L, trace) -> list[int]:
    n = G.n
    v = cycle_order(G)
    f = [0] * n
    c: list[int] = []
    head = 3 if n == 5 else 4
    for i in range(head):
        c.append(first_available(L[v[i]], c))  # type: ignore[arg-type]
        f[v[i]] = c[i]
    if n == 5:
        f[v[3]] = first_available(L[v[3]], (c[1], c[2]))  # type: ignore[assignment]
        f[v[4]] = first_available(L[v[4]], (c[0], f[v[3]]))  # type: ignore[assignment]
    else:
        f[v[4]] = first_available(L[v[4]], (c[1], c[2], c[3]))  # type: ignore[assignment]
        f[v[5]] = first_available(L[v[5]], (c[0], f[v[4]], c[3]))  # type: ignore[assignment]
    note(trace, step=f"distinct-head-{head}", order=v)
    return f


def _anchor_edge(G: Graph, L) -> tuple[int, int]:
    for u, w in G.sorted_edges():
        if set(L[u]) != set(L[w]):
            return u, w
    raise InternalInconsistency("non-identical lists but no edge with differing lists")


def _long_cycle(G: Graph, L, trace) -> list[int]:
    n = G.n
    x, y1 = _anchor_edge(G, L)
    ring = cycle_order(G, start=x, towards=y1)  # x, y1, y2, ..., w2, w1
    w1 = ring[-1]
    f = [0] * n
    cx = min(set(L[x]) - set(L[y1]))
    f[x] = cx
    f[w1] = first_available(L[w1], (cx,))  # type: ignore[assignment]
    f[y1] = first_available(L[y1], (f[w1],))  # type: ignore[assignment]
    note(trace, step="anchor", x=x, y1=y1, w1=w1, c_x=cx)
    # odd n: x, y1..yh, wh..w1 ; even n: x, y1..y(h-1), z, w(h-1)..w1
    h = n // 2 if n % 2 else n // 2 - 1
    ys = ring[1:1 + h]
    ws = ring[::-1][:h]  # w1, w2, ...
    for k in range(1, h):
        f[ys[k]] = first_available(L[ys[k]], (cx, f[ys[k - 1]]))  # type: ignore[assignment]
        f[ws[k]] = first_available(L[ws[k]], (cx, f[ws[k - 1]]))  # type: ignore[assignment]
    if n % 2 == 1:
        yn, wn = ys[-1], ws[-1]
        if f[wn] == f[yn]:
            f[wn] = first_available(L[wn], (f[yn], f[ws[-2]]))  # type: ignore[assignment]
            note(trace, step="recolor-w_last", vertex=wn, color=f[wn])
        return f
    z = ring[n // 2]
    rest = set(L[z]) - {cx, f[ys[-1]], f[ws[-1]]}
    if rest:
        f[z] = min(rest)
        note(trace, step="z-free", z=z, color=f[z])
        return f
    f[z] = cx
    note(trace, step="z-takes-c_x", z=z)
    chk = is_distinguishing(G, f)
    if chk:
        return f
    phi = chk.witness
    kind = "reflection" if phi[y1] == ys[-1] else "rotation"
    f[y1] = first_available(L[y1], (f[y1], f[ys[1]]))  # type: ignore[assignment]
    note(trace, step=f"recolor-y1-after-{kind}", vertex=y1, color=f[y1])
    return f
