"""Backend selection and graph-to-kernel plumbing.

The compiled extension is used when it imports; otherwise the pure-Python
twin. Setting ``LISTDIST_PURE=1`` forces the fallback.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from types import ModuleType
from typing import Sequence

import numpy as np

from . import _pykernels
from .graph import Graph, search_order

_compiled: ModuleType | None
try:
    from . import _kernels as _compiled  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on build
    _compiled = None

if _compiled is not None and not os.environ.get("LISTDIST_PURE"):
    impl: ModuleType = _compiled
    BACKEND = "compiled"
else:
    impl = _pykernels
    BACKEND = "python"


def backends() -> dict[str, ModuleType]:
    out = {"python": _pykernels}
    if _compiled is not None:
        out["compiled"] = _compiled
    return out


@dataclass(frozen=True)
class Prepared:
    """A graph relabeled into search order, with automorphisms in that labeling."""
    n: int
    order: tuple[int, ...]  # position -> vertex
    back_ptr: np.ndarray
    back_idx: np.ndarray
    perms: np.ndarray
    inv: np.ndarray
    last_moved: np.ndarray


def prepare(G: Graph, auts: Sequence[Sequence[int]] = (), order: Sequence[int] | None = None) -> Prepared:
    """Relabel ``G`` by ``order`` (default: component-wise BFS) and keep the
    nontrivial automorphisms among ``auts``."""
    n = G.n
    order = tuple(order) if order is not None else tuple(search_order(G))
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    back_ptr = [0]
    back_idx: list[int] = []
    for i, v in enumerate(order):
        back_idx += sorted(pos[u] for u in G.adj[v] if pos[u] < i)
        back_ptr.append(len(back_idx))
    rows = []
    for p in auts:
        q = [0] * n
        for v in range(n):
            q[pos[v]] = pos[p[v]]
        if any(q[i] != i for i in range(n)):
            rows.append(q)
    perms = np.asarray(rows, dtype=np.int32).reshape(len(rows), n)
    inv = np.empty_like(perms)
    if len(rows):
        inv[np.arange(len(rows))[:, None], perms] = np.arange(n, dtype=np.int32)[None, :]
    moved = perms != np.arange(n, dtype=np.int32)[None, :]
    last_moved = np.array([int(np.nonzero(r)[0].max()) for r in moved], dtype=np.int64)
    return Prepared(n, order, np.asarray(back_ptr, dtype=np.int32),
                    np.asarray(back_idx, dtype=np.int32), perms, inv, last_moved)


def search(prep: Prepared, lists: Sequence[Sequence[int]], proper: bool = True,
           rgs: bool = False, node_limit: int = 0,
           backend: ModuleType | None = None) -> tuple[int, tuple[int, ...] | None, int]:
    """Find a coloring from ``lists`` (indexed by vertex) that kills every
    automorphism in ``prep`` (and is proper when asked).

    Returns ``(status, coloring by vertex or None, nodes)``.
    """
    mod = backend or impl
    n = prep.n
    ptr = [0]
    vals: list[int] = []
    for v in prep.order:
        vals += list(lists[v])
        ptr.append(len(vals))
    status, col, nodes = mod.search(
        n, prep.back_ptr, prep.back_idx, np.asarray(ptr, dtype=np.int32),
        np.asarray(vals, dtype=np.int32), prep.perms, prep.inv, prep.last_moved,
        bool(proper), bool(rgs), int(node_limit))
    if status != 1:
        return status, None, int(nodes)
    f = [0] * n
    for i, v in enumerate(prep.order):
        f[v] = int(col[i])
    return 1, tuple(f), int(nodes)


def find_bad(prep: Prepared, k: int, proper: bool = True, budget: int = 0,
             node_limit: int = 0, backend: ModuleType | None = None
             ) -> tuple[int, tuple[tuple[int, ...], ...] | None, int]:
    """Exhaustive scan of canonical k-list assignments (up to color relabeling).

    Returns ``(status, lists by vertex or None, assignments checked)``;
    status 0 all good, 1 bad found, 2 budget or node limit exhausted.
    """
    mod = backend or impl
    status, arr, checked = mod.find_bad(
        prep.n, int(k), prep.back_ptr, prep.back_idx, prep.perms, prep.inv,
        prep.last_moved, bool(proper), int(budget), int(node_limit))
    if status != 1:
        return int(status), None, int(checked)
    L: list[tuple[int, ...]] = [()] * prep.n
    for i, v in enumerate(prep.order):
        L[v] = tuple(int(c) for c in arr[i])
    return 1, tuple(L), int(checked)
