"""Automorphism groups, isomorphism testing and group profiling.

The search refines a vertex coloring of the disjoint union ``G + H`` (so class
names are shared between the two graphs), individualizes one vertex of ``G``
against each candidate in ``H`` and recurses. At desk scale (64 vertices) the
full list of automorphisms is the contract, not a generating set.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .errors import NotAGroupError, SizeLimitError
from .graph import Graph

Permutation = tuple[int, ...]

DEFAULT_MAX_VERTICES = 64


def _refine(adj: Sequence[Sequence[int]], colors: list[int]) -> list[int]:
    """Iterated neighbor-multiset refinement until the number of classes is stable."""
    n_classes = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        index = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [index[s] for s in sigs]
        if len(index) == n_classes:
            return new
        colors, n_classes = new, len(index)


def _isomorphisms(G: Graph, H: Graph, first_only: bool,
                  initial: Sequence[int] | None = None) -> Iterator[Permutation]:
    """Isomorphisms G -> H; ``initial`` (length 2n) colors G then H, and only
    color-respecting maps are produced."""
    n = G.n
    if H.n != n or G.m != H.m or G.degree_sequence() != H.degree_sequence():
        return
    adj = [list(G.sorted_adj[v]) for v in range(n)]
    adj += [[w + n for w in H.sorted_adj[v]] for v in range(n)]
    target_edges = H.edges

    def balanced(colors: list[int]) -> bool:
        return Counter(colors[:n]) == Counter(colors[n:])

    def search(colors: list[int]) -> Iterator[Permutation]:
        if not balanced(colors):
            return
        sizes = Counter(colors[:n])
        open_cells = [(size, c) for c, size in sizes.items() if size > 1]
        if not open_cells:
            where = {colors[n + v]: v for v in range(n)}
            image = tuple(where[colors[v]] for v in range(n))
            if all((min(image[u], image[v]), max(image[u], image[v])) in target_edges
                   for u, v in G.edges):
                yield image
            return
        _, cell = min(open_cells)
        v = min(u for u in range(n) if colors[u] == cell)
        fresh = max(colors) + 1
        for w in range(n):
            if colors[n + w] != cell:
                continue
            trial = list(colors)
            trial[v] = fresh
            trial[n + w] = fresh
            yield from search(_refine(adj, trial))

    start = _refine(adj, list(initial) if initial is not None else [0] * (2 * n))
    for image in search(start):
        yield image
        if first_only:
            return


def _check_size(G: Graph, max_vertices: int) -> None:
    if G.n > max_vertices:
        raise SizeLimitError(f"graph has {G.n} vertices, symmetry search bound is {max_vertices}")


@lru_cache(maxsize=512)
def _automorphisms_cached(G: Graph) -> tuple[Permutation, ...]:
    return tuple(sorted(_isomorphisms(G, G, first_only=False)))


def automorphisms(G: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> tuple[Permutation, ...]:
    """All automorphisms of ``G`` (identity included), sorted lexicographically by image."""
    _check_size(G, max_vertices)
    if G.n == 0:
        return ((),)
    return _automorphisms_cached(G)


def find_isomorphism(G: Graph, H: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> Permutation | None:
    """Some bijection ``p`` with ``uv in E(G) <=> p[u]p[v] in E(H)``, or None."""
    _check_size(G, max_vertices)
    _check_size(H, max_vertices)
    if G.n == 0 and H.n == 0:
        return ()
    return next(_isomorphisms(G, H, first_only=True), None)


def are_isomorphic(G: Graph, H: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> bool:
    return find_isomorphism(G, H, max_vertices) is not None


# -- permutations -------------------------------------------------------------


def colored_automorphism(G: Graph, f: Sequence[int],
                         max_vertices: int = DEFAULT_MAX_VERTICES) -> Permutation | None:
    """Some nontrivial automorphism with ``f(p(v)) == f(v)`` for all v, or None.

    Works down a chain of point stabilizers instead of listing the group: look
    for a map sending the first vertex of a nontrivial cell elsewhere; if none
    exists, fix that vertex and continue.
    """
    _check_size(G, max_vertices)
    n = G.n
    if len(f) != n:
        raise ValueError("coloring and graph have different sizes")
    names = {c: i for i, c in enumerate(sorted(set(f)))}
    base = [names[c] for c in f]
    adj = [list(G.sorted_adj[v]) for v in range(n)]
    fresh = len(names)
    fixed: list[int] = []
    while True:
        cur = list(base)
        for i, v in enumerate(fixed):
            cur[v] = fresh + i
        mark = fresh + len(fixed)
        ref = _refine(adj, cur)
        sizes = Counter(ref)
        open_cells = [(size, c) for c, size in sizes.items() if size > 1]
        if not open_cells:
            return None
        _, cell = min(open_cells)
        v = min(u for u in range(n) if ref[u] == cell)
        for u in range(n):
            if u == v or ref[u] != cell:
                continue
            left, right = list(cur), list(cur)
            left[v] = mark
            right[u] = mark
            image = next(_isomorphisms(G, G, True, left + right), None)
            if image is not None:
                return image
        fixed.append(v)


def identity(n: int) -> Permutation:
    return tuple(range(n))


def is_identity(p: Sequence[int]) -> bool:
    return all(i == x for i, x in enumerate(p))


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """``p ∘ q``: apply ``q`` first."""
    return tuple(p[x] for x in q)


def inverse(p: Sequence[int]) -> Permutation:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def power(p: Sequence[int], e: int) -> Permutation:
    result = identity(len(p))
    base = tuple(p)
    while e > 0:
        if e & 1:
            result = compose(base, result)
        base = compose(base, base)
        e >>= 1
    return result


def permutation_order(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    order = 1
    for s in range(len(p)):
        if seen[s]:
            continue
        length = 0
        x = s
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        order = math.lcm(order, length)
    return order


def preserves_coloring(p: Sequence[int], f: Sequence[int]) -> bool:
    """True iff ``f(p(v)) == f(v)`` for every vertex ``v``."""
    if len(p) != len(f):
        raise ValueError("permutation and coloring have different domains")
    return all(f[p[v]] == f[v] for v in range(len(p)))


# -- group profile ------------------------------------------------------------


@dataclass(frozen=True)
class GroupProfile:
    order: int
    abelian: bool
    cyclic: bool
    element_orders: tuple[int, ...]
    prime_power_order: tuple[int, int] | None

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "abelian": self.abelian,
            "cyclic": self.cyclic,
            "element_orders": list(self.element_orders),
            "prime_power_order": list(self.prime_power_order) if self.prime_power_order else None,
        }


def prime_power(m: int) -> tuple[int, int] | None:
    """``(p, e)`` with ``m == p**e`` and ``e >= 1``, else None."""
    if m < 2:
        return None
    p = next(d for d in range(2, m + 1) if m % d == 0)
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return (p, e) if m == 1 else None


def _codes(perms: np.ndarray, weights: np.ndarray) -> np.ndarray:
    return perms.astype(np.uint64) @ weights


def group_profile(auts: Sequence[Sequence[int]]) -> GroupProfile:
    """Order, commutativity, cyclicity and element orders of a permutation group.

    Raises NotAGroupError when the list is not closed under composition.
    """
    if not auts:
        raise NotAGroupError("empty permutation list")
    m = len(auts)
    n = len(auts[0])
    if n == 0:
        return GroupProfile(1, True, True, (1,), None)
    P = np.asarray(auts, dtype=np.int64)
    rng = np.random.default_rng(0x5EED)
    # two independent 64-bit hashes of each permutation
    w1 = rng.integers(1, 2**63, size=n, dtype=np.uint64)
    w2 = rng.integers(1, 2**63, size=n, dtype=np.uint64)
    known = set(zip(_codes(P, w1).tolist(), _codes(P, w2).tolist()))
    if len(known) != m:
        raise NotAGroupError("permutation list has duplicates")
    if tuple(range(n)) not in {tuple(a) for a in auts}:
        raise NotAGroupError("identity missing")
    abelian = True
    for i in range(m):
        # row j of prod is auts[i] ∘ auts[j]
        prod = P[i][P]
        codes = zip(_codes(prod, w1).tolist(), _codes(prod, w2).tolist())
        if not all(c in known for c in codes):
            raise NotAGroupError(f"product with element {i} leaves the set")
        if abelian:
            other = P[:, P[i]]  # auts[j] ∘ auts[i]
            if not np.array_equal(prod, other):
                abelian = False
    orders = tuple(sorted(permutation_order(a) for a in auts))
    cyclic = orders[-1] == m
    return GroupProfile(m, abelian, cyclic, orders, prime_power(m))


def generator(auts: Sequence[Sequence[int]]) -> Permutation | None:
    """Smallest (lexicographic) element whose order equals the group order, if cyclic."""
    m = len(auts)
    for a in sorted(tuple(x) for x in auts):
        if permutation_order(a) == m:
            return a
    return None
