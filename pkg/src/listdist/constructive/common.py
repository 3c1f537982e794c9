"""Helpers shared by the constructive procedures."""
from __future__ import annotations

from typing import Iterable, Sequence

from ..coloring import Coloring, ListAssignment, min_list_size, validate_assignment, verify
from ..errors import InternalInconsistency, ListError
from ..graph import Graph


def checked_lists(G: Graph, L: Sequence[Sequence[int]], need: int) -> ListAssignment:
    L = validate_assignment(L, G.n)
    if G.n and min_list_size(L) < need:
        raise ListError(f"lists need at least {need} colors, shortest has {min_list_size(L)}")
    return L


def first_available(lst: Iterable[int], forbidden: Iterable[int]) -> int | None:
    """Smallest color of ``lst`` outside ``forbidden``."""
    bad = set(forbidden)
    return min((c for c in lst if c not in bad), default=None)


def all_distinct_coloring(G: Graph, L: Sequence[Sequence[int]], order: Sequence[int] | None = None
                          ) -> Coloring:
    """Pairwise distinct colors, greedily in ``order``; needs lists of size >= n."""
    L = checked_lists(G, L, G.n)
    f = [0] * G.n
    used: set[int] = set()
    for v in (order if order is not None else range(G.n)):
        c = first_available(L[v], used)
        if c is None:  # cannot happen with lists of size n
            raise InternalInconsistency("all-distinct greedy ran out of colors")
        f[v] = c
        used.add(c)
    return tuple(f)


def greedy_proper(G: Graph, L: Sequence[Sequence[int]], order: Sequence[int]) -> Coloring | None:
    """First-fit proper coloring in ``order``; None if some vertex is stuck."""
    f: list[int | None] = [None] * G.n
    for v in order:
        c = first_available(L[v], (f[u] for u in G.adj[v] if f[u] is not None))
        if c is None:
            return None
        f[v] = c
    return tuple(f)  # type: ignore[arg-type]


def certify(G: Graph, L: Sequence[Sequence[int]], f: Sequence[int], procedure: str) -> Coloring:
    rep = verify(G, L, f)
    if not rep.ok:
        raise InternalInconsistency(f"{procedure} produced an invalid coloring: {rep.to_dict()}")
    return tuple(f)


def note(trace: list | None, **entry) -> None:
    if trace is not None:
        trace.append(entry)
