"""Pure-Python search kernels; reference semantics for the compiled twin in ``_kernels.pyx``.

Both kernels work on a graph relabeled so that the search order is ``0..n-1``.
Inputs are int32 numpy arrays:

* ``back_ptr``, ``back_idx``: CSR of earlier neighbors (``u < i``) of each vertex ``i``.
* ``list_ptr``, ``list_val``: CSR of the color lists.
* ``perms``, ``inv``: ``A x n`` nontrivial automorphisms and their inverses.
* ``last_moved``: for each automorphism, the largest vertex it moves.

An automorphism is *killed* as soon as two vertices it pairs up (``v`` and
``sigma(v)``) are both colored and differ; when the last vertex it moves is
colored and it is still alive, the branch cannot be distinguishing.

Status codes of ``search``: 1 found, 0 none, -1 node limit hit.
Status codes of ``find_bad``: 0 every assignment good, 1 bad found, 2 budget or
node limit exhausted.
"""
from __future__ import annotations

import sys
from itertools import combinations

import numpy as np

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))


class _State:
    def __init__(self, n, back_ptr, back_idx, perms, inv, last_moved, proper, node_limit):
        self.n = n
        self.back = [back_idx[back_ptr[i]:back_ptr[i + 1]].tolist() for i in range(n)]
        self.perms = [list(p) for p in np.asarray(perms).tolist()]
        self.inv = [list(p) for p in np.asarray(inv).tolist()]
        self.A = len(self.perms)
        self.doom = [[] for _ in range(n)]
        for a, last in enumerate(np.asarray(last_moved).tolist()):
            self.doom[last].append(a)
        self.proper = bool(proper)
        self.node_limit = int(node_limit)
        self.nodes = 0

    def run(self, lists, rgs):
        n = self.n
        col = [-1] * n
        killed = [-1] * self.A
        perms, inv, back, doom, proper = self.perms, self.inv, self.back, self.doom, self.proper
        limit = self.node_limit

        def rec(i, maxidx):
            if i == n:
                return 1
            for idx, c in enumerate(lists[i]):
                if rgs and idx > maxidx + 1:
                    break
                self.nodes += 1
                if limit > 0 and self.nodes > limit:
                    return -1
                if proper and any(col[u] == c for u in back[i]):
                    continue
                col[i] = c
                for a in range(self.A):
                    if killed[a] != -1:
                        continue
                    u = perms[a][i]
                    if u < i and col[u] != c:
                        killed[a] = i
                        continue
                    u = inv[a][i]
                    if u < i and col[u] != c:
                        killed[a] = i
                if all(killed[a] != -1 for a in doom[i]):
                    r = rec(i + 1, idx if idx > maxidx else maxidx)
                    if r != 0:
                        return r
                for a in range(self.A):
                    if killed[a] == i:
                        killed[a] = -1
                col[i] = -1
            return 0

        status = rec(0, -1)
        return status, col


def _lists_from_csr(n, list_ptr, list_val):
    return [list_val[list_ptr[i]:list_ptr[i + 1]].tolist() for i in range(n)]


def search(n, back_ptr, back_idx, list_ptr, list_val, perms, inv, last_moved,
           proper, rgs, node_limit):
    """Return ``(status, coloring int64 array, nodes)``."""
    st = _State(n, back_ptr, back_idx, perms, inv, last_moved, proper, node_limit)
    status, col = st.run(_lists_from_csr(n, list_ptr, list_val), bool(rgs))
    return status, np.asarray(col, dtype=np.int64), st.nodes


def find_bad(n, k, back_ptr, back_idx, perms, inv, last_moved, proper, budget, node_limit):
    """Scan canonical unordered k-list assignments for one with no valid coloring.

    Returns ``(status, lists int64 n x k or None, assignments_checked)``.
    """
    st = _State(n, back_ptr, back_idx, perms, inv, last_moved, proper, 0)
    lists = [None] * n
    checked = 0

    def gen(i, m):
        nonlocal checked
        if i == n:
            checked += 1
            if budget > 0 and checked > budget:
                return 2
            st.nodes = 0
            st.node_limit = node_limit
            status, _ = st.run(lists, False)
            if status == 0:
                return 1
            return 2 if status == -1 else 0
        for t in range(0, k + 1):
            if k - t > m:
                continue
            fresh = list(range(m, m + t))
            for old in combinations(range(m), k - t):
                lists[i] = list(old) + fresh
                r = gen(i + 1, m + t)
                if r != 0:
                    return r
        return 0

    status = gen(0, 0)
    if status == 1:
        return 1, np.asarray(lists, dtype=np.int64), checked
    return status, None, min(checked, budget) if budget > 0 else checked
