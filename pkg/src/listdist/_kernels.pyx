# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled search kernels. Same contract as ``_pykernels``; see that module."""
import numpy as np


cdef class _State:
    cdef int n, A, proper, rgs
    cdef long long nodes, node_limit
    cdef int[::1] back_ptr, back_idx, list_ptr, list_val
    cdef int[:, ::1] perms, inv
    cdef int[::1] col, killed, doom_ptr, doom_idx

    def __init__(self, int n, back_ptr, back_idx, perms, inv, last_moved, int proper,
                 long long node_limit):
        self.n = n
        self.back_ptr = back_ptr
        self.back_idx = back_idx
        self.perms = perms
        self.inv = inv
        self.A = perms.shape[0]
        self.proper = proper
        self.node_limit = node_limit
        self.nodes = 0
        self.col = np.full(n, -1, dtype=np.int32)
        self.killed = np.full(max(self.A, 1), -1, dtype=np.int32)
        lm = np.asarray(last_moved, dtype=np.int64)
        order = np.argsort(lm, kind="stable").astype(np.int32)
        counts = np.bincount(lm, minlength=n) if self.A else np.zeros(n, dtype=np.int64)
        ptr = np.zeros(n + 1, dtype=np.int32)
        ptr[1:] = np.cumsum(counts)
        self.doom_ptr = ptr
        self.doom_idx = order if self.A else np.zeros(1, dtype=np.int32)

    cdef void reset(self):
        cdef int i
        for i in range(self.n):
            self.col[i] = -1
        for i in range(self.A):
            self.killed[i] = -1
        self.nodes = 0

    cdef int rec(self, int i, int maxidx):
        cdef int j, idx, c, t, a, u, r, doomed
        if i == self.n:
            return 1
        for j in range(self.list_ptr[i], self.list_ptr[i + 1]):
            idx = j - self.list_ptr[i]
            if self.rgs and idx > maxidx + 1:
                break
            c = self.list_val[j]
            self.nodes += 1
            if self.node_limit > 0 and self.nodes > self.node_limit:
                return -1
            if self.proper:
                for t in range(self.back_ptr[i], self.back_ptr[i + 1]):
                    if self.col[self.back_idx[t]] == c:
                        break
                else:
                    t = -1
                if t != -1:
                    continue
            self.col[i] = c
            for a in range(self.A):
                if self.killed[a] != -1:
                    continue
                u = self.perms[a, i]
                if u < i and self.col[u] != c:
                    self.killed[a] = i
                    continue
                u = self.inv[a, i]
                if u < i and self.col[u] != c:
                    self.killed[a] = i
            doomed = 0
            for t in range(self.doom_ptr[i], self.doom_ptr[i + 1]):
                if self.killed[self.doom_idx[t]] == -1:
                    doomed = 1
                    break
            if not doomed:
                r = self.rec(i + 1, idx if idx > maxidx else maxidx)
                if r != 0:
                    return r
            for a in range(self.A):
                if self.killed[a] == i:
                    self.killed[a] = -1
            self.col[i] = -1
        return 0

    cdef int run(self, list_ptr, list_val, int rgs):
        self.list_ptr = list_ptr
        self.list_val = list_val
        self.rgs = rgs
        self.reset()
        return self.rec(0, -1)


def _i32(x):
    return np.ascontiguousarray(x, dtype=np.int32)


def _prep(n, back_ptr, back_idx, perms, inv, last_moved):
    perms = np.ascontiguousarray(perms, dtype=np.int32).reshape(-1, n) if n else np.zeros((0, 0), np.int32)
    inv = np.ascontiguousarray(inv, dtype=np.int32).reshape(-1, n) if n else np.zeros((0, 0), np.int32)
    return _i32(back_ptr), _i32(back_idx), perms, inv, np.asarray(last_moved, dtype=np.int64)


def search(int n, back_ptr, back_idx, list_ptr, list_val, perms, inv, last_moved,
           bint proper, bint rgs, long long node_limit):
    """Return ``(status, coloring int64 array, nodes)``."""
    bp, bi, P, I, lm = _prep(n, back_ptr, back_idx, perms, inv, last_moved)
    cdef _State st = _State(n, bp, bi, P, I, lm, proper, node_limit)
    cdef int status = st.run(_i32(list_ptr), _i32(list_val), rgs)
    return status, np.asarray(st.col, dtype=np.int64), st.nodes


cdef class _Enum:
    cdef _State st
    cdef int n, k
    cdef long long budget, node_limit, checked
    cdef int[::1] lptr, lval, chosen

    cdef int leaf(self):
        cdef int s
        self.checked += 1
        if self.budget > 0 and self.checked > self.budget:
            return 2
        self.st.node_limit = self.node_limit
        s = self.st.run(self.lptr, self.lval, 0)
        if s == 0:
            return 1
        if s == -1:
            return 2
        return 0

    cdef int pick(self, int i, int m, int t, int slot, int start):
        # choose k - t old colors from 0..m-1 in increasing order, then append t fresh ones
        cdef int c, r, base = i * self.k
        if slot == self.k - t:
            for c in range(t):
                self.lval[base + slot + c] = m + c
            return self.gen(i + 1, m + t)
        for c in range(start, m):
            if m - c < self.k - t - slot:
                break
            self.lval[base + slot] = c
            r = self.pick(i, m, t, slot + 1, c + 1)
            if r != 0:
                return r
        return 0

    cdef int gen(self, int i, int m):
        cdef int t, r
        if i == self.n:
            return self.leaf()
        for t in range(self.k + 1):
            if self.k - t > m:
                continue
            r = self.pick(i, m, t, 0, 0)
            if r != 0:
                return r
        return 0


def find_bad(int n, int k, back_ptr, back_idx, perms, inv, last_moved, bint proper,
             long long budget, long long node_limit):
    """Scan canonical unordered k-list assignments for one with no valid coloring.

    Returns ``(status, lists int64 n x k or None, assignments_checked)``.
    """
    bp, bi, P, I, lm = _prep(n, back_ptr, back_idx, perms, inv, last_moved)
    cdef _Enum e = _Enum()
    e.st = _State(n, bp, bi, P, I, lm, proper, node_limit)
    e.n = n
    e.k = k
    e.budget = budget
    e.node_limit = node_limit
    e.checked = 0
    e.lptr = np.arange(0, n * k + 1, k, dtype=np.int32)
    e.lval = np.zeros(max(n * k, 1), dtype=np.int32)
    cdef int status = e.gen(0, 0)
    if status == 1:
        return 1, np.asarray(e.lval, dtype=np.int64)[: n * k].reshape(n, k), e.checked
    checked = min(e.checked, budget) if budget > 0 else e.checked
    return status, None, checked
