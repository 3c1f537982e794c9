"""Simple undirected graphs on vertices ``0..n-1`` and structural queries."""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DisconnectedError, GraphError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. ``edges`` holds pairs ``(u, v)`` with ``u < v``.

    Instances are hashable, so they can key caches (automorphism groups).
    """

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge {(u, v)} is not a normalized pair below n={self.n}")

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def sorted_adj(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(s)) for s in self.adj)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def max_degree(self) -> int:
        return max((len(s) for s in self.adj), default=0)

    @cached_property
    def min_degree(self) -> int:
        return min((len(s) for s in self.adj), default=0)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def degree_sequence(self) -> list[int]:
        return sorted((len(s) for s in self.adj), reverse=True)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph, normalizing and deduplicating edge pairs.

    Raises GraphError on a malformed pair, a loop or an endpoint outside ``0..n-1``.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    normalized = set()
    for e in edges:
        if len(e) != 2:
            raise GraphError(f"edge {tuple(e)} does not have two endpoints")
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
        normalized.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(normalized))


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def relabel(G: Graph, mapping: Sequence[int]) -> Graph:
    """Image of ``G`` under the vertex bijection ``v -> mapping[v]``."""
    return build_graph(G.n, ((mapping[u], mapping[v]) for u, v in G.edges))


def cartesian_product(G: Graph, H: Graph) -> Graph:
    """Cartesian product; vertex ``(a, b)`` is numbered ``a * H.n + b``."""
    k = H.n
    edges = []
    for a in range(G.n):
        for b, b2 in H.edges:
            edges.append((a * k + b, a * k + b2))
    for a, a2 in G.edges:
        for b in range(k):
            edges.append((a * k + b, a2 * k + b))
    return build_graph(G.n * k, edges)


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    edges = []
    offset = 0
    for P in parts:
        edges.extend((u + offset, v + offset) for u, v in P.edges)
        offset += P.n
    return build_graph(offset, edges)


def join(parts: Sequence[Graph]) -> Graph:
    """Disjoint union of ``parts`` (blocks in order) plus every edge between blocks."""
    if not parts:
        raise GraphError("join needs at least one part")
    base = disjoint_union(parts)
    offsets = list(itertools.accumulate((P.n for P in parts), initial=0))
    edges = set(base.edges)
    for i, j in itertools.combinations(range(len(parts)), 2):
        for u in range(offsets[i], offsets[i + 1]):
            for v in range(offsets[j], offsets[j + 1]):
                edges.add((u, v))
    return Graph(base.n, frozenset(edges))


def part_blocks(parts: Sequence[Graph]) -> list[range]:
    """Vertex ranges occupied by each part in :func:`join` / :func:`disjoint_union`."""
    offsets = list(itertools.accumulate((P.n for P in parts), initial=0))
    return [range(offsets[i], offsets[i + 1]) for i in range(len(parts))]


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``S``.

    Returns ``(H, back)`` where ``back[i]`` is the vertex of ``G`` that became
    vertex ``i`` of ``H`` (vertices keep their relative order).
    """
    back = sorted(set(S))
    for v in back:
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} not in graph")
    index = {v: i for i, v in enumerate(back)}
    edges = [(index[u], index[v]) for u, v in G.edges if u in index and v in index]
    return build_graph(len(back), edges), back


def remove_vertices(G: Graph, removed: Iterable[int]) -> tuple[Graph, list[int]]:
    gone = set(removed)
    return induced_subgraph(G, (v for v in range(G.n) if v not in gone))


# -- traversal ---------------------------------------------------------------


def components(G: Graph) -> list[list[int]]:
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [], deque([s])
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in G.sorted_adj[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(components(G)) == 1


@dataclass(frozen=True)
class BfsFrame:
    """Breadth-first spanning tree: ``order`` lists vertices by rank, ``rank`` inverts it."""

    root: int
    order: tuple[int, ...]
    rank: tuple[int, ...]
    parent: tuple[int | None, ...]
    level: tuple[int, ...]

    def children(self, v: int) -> list[int]:
        return [w for w in self.order if self.parent[w] == v]

    def siblings(self, v: int) -> list[int]:
        p = self.parent[v]
        if p is None:
            return []
        return sorted(w for w in range(len(self.order)) if w != v and self.parent[w] == p)

    def earlier(self, u: int, v: int) -> bool:
        return self.rank[u] < self.rank[v]


def bfs_frame(G: Graph, root: int) -> BfsFrame:
    """BFS tree of a connected graph; neighbors are explored in ascending id."""
    if not 0 <= root < G.n:
        raise GraphError(f"root {root} not in graph")
    parent: list[int | None] = [None] * G.n
    level = [-1] * G.n
    level[root] = 0
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in G.sorted_adj[u]:
            if level[w] < 0:
                level[w] = level[u] + 1
                parent[w] = u
                order.append(w)
                queue.append(w)
    if len(order) != G.n:
        raise DisconnectedError("bfs_frame needs a connected graph")
    rank = [0] * G.n
    for i, v in enumerate(order):
        rank[v] = i
    return BfsFrame(root, tuple(order), tuple(rank), tuple(parent), tuple(level))


def search_order(G: Graph) -> list[int]:
    """Component-wise BFS order (components by smallest vertex); used by the searches."""
    order = []
    for comp in components(G):
        start = comp[0]
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in G.sorted_adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def girth(G: Graph) -> float:
    """Length of a shortest cycle via BFS from every vertex, ``inf`` for forests."""
    best = float("inf")
    for s in range(G.n):
        dist = [-1] * G.n
        par = [-1] * G.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.sorted_adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    par[w] = u
                    queue.append(w)
                elif par[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_bipartite(G: Graph) -> bool:
    side = [-1] * G.n
    for s in range(G.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and is_connected(G) and G.m == G.n - 1


def is_unicyclic(G: Graph) -> bool:
    return G.n >= 3 and is_connected(G) and G.m == G.n


def structure_report(G: Graph) -> dict:
    connected = is_connected(G)
    g = girth(G)
    return {
        "n": G.n,
        "m": G.m,
        "max_degree": G.max_degree,
        "min_degree": G.min_degree,
        "connected": connected,
        "bipartite": is_bipartite(G),
        "tree": is_tree(G),
        "unicyclic": is_unicyclic(G),
        "girth": g,
    }


def is_k_connected(G: Graph, k: int) -> bool:
    """At least ``k + 1`` vertices and no set of ``k - 1`` or fewer vertices disconnects it.

    Exhaustive over removal sets, intended for small graphs.
    """
    if G.n < k + 1:
        return False
    for size in range(0, max(k, 0)):
        for removed in itertools.combinations(range(G.n), size):
            H, _ = remove_vertices(G, removed)
            if not is_connected(H):
                return False
    return True


def is_path_graph(G: Graph) -> bool:
    if G.n == 1:
        return True
    return is_tree(G) and G.max_degree <= 2


def is_cycle_graph(G: Graph) -> bool:
    return G.n >= 3 and is_connected(G) and all(len(s) == 2 for s in G.adj)


def path_order(G: Graph) -> list[int]:
    """Vertices of a path from its smaller-id endpoint to the other."""
    if G.n == 1:
        return [0]
    if not is_path_graph(G):
        raise GraphError("not a path")
    start = min(v for v in range(G.n) if G.degree(v) == 1)
    order = [start]
    prev = -1
    while len(order) < G.n:
        cur = order[-1]
        nxt = next(w for w in G.sorted_adj[cur] if w != prev)
        prev = cur
        order.append(nxt)
    return order


def cycle_order(G: Graph, start: int | None = None, towards: int | None = None) -> list[int]:
    """Cyclic vertex order of a cycle graph.

    Starts at ``start`` (default: vertex 0) and first steps to ``towards``
    (default: the smaller neighbor).
    """
    if not is_cycle_graph(G):
        raise GraphError("not a cycle")
    s = 0 if start is None else start
    nxt = min(G.adj[s]) if towards is None else towards
    if nxt not in G.adj[s]:
        raise GraphError(f"{towards} is not adjacent to {s}")
    order = [s, nxt]
    while len(order) < G.n:
        a, b = order[-2], order[-1]
        order.append(next(w for w in G.adj[b] if w != a))
    return order


def k_core(G: Graph, k: int) -> list[int]:
    """Vertices left after repeatedly deleting vertices of degree below ``k``."""
    deg = [G.degree(v) for v in range(G.n)]
    alive = [True] * G.n
    queue = deque(v for v in range(G.n) if deg[v] < k)
    for v in queue:
        alive[v] = False
    while queue:
        u = queue.popleft()
        for w in G.adj[u]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] < k:
                    alive[w] = False
                    queue.append(w)
    return [v for v in range(G.n) if alive[v]]


def has_triangle(G: Graph) -> bool:
    return any(G.adj[u] & G.adj[v] for u, v in G.edges)


def is_complete_bipartite(G: Graph) -> bool:
    """True for ``K_{a,b}`` with ``a, b >= 1`` (connected, bipartite, all cross pairs adjacent)."""
    if G.n < 2 or not is_connected(G) or not is_bipartite(G):
        return False
    side = [-1] * G.n
    side[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in G.adj[u]:
            if side[w] < 0:
                side[w] = 1 - side[u]
                queue.append(w)
    a = sum(1 for s in side if s == 0)
    return G.m == a * (G.n - a)


def contains_complete_bipartite(G: Graph, s: int) -> bool:
    """Whether ``G`` has a (not necessarily induced) ``K_{s,s}`` subgraph.

    Grows one side vertex by vertex while tracking the common neighborhood.
    """
    if s <= 0:
        return True
    if 2 * s > G.n:
        return False

    def grow(chosen: list[int], common: frozenset[int], start: int) -> bool:
        if len(chosen) == s:
            return len(common - set(chosen)) >= s
        for v in range(start, G.n):
            nc = common & G.adj[v]
            if len(nc - set(chosen)) >= s:
                if grow(chosen + [v], nc, v + 1):
                    return True
        return False

    return grow([], frozenset(range(G.n)), 0)
