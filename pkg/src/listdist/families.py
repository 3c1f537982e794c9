"""Book graphs B_n and friendship graphs F_n: closed forms and list colorings.

Vertex numbering follows ``generators.book`` and ``generators.friendship``.
All ceilings use integer arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt
from typing import Sequence

from .coloring import Coloring, min_list_size, validate_assignment
from .errors import InternalInconsistency, ListError, PreconditionError
from .matching import perfect_matching


def ceil_sqrt(n: int) -> int:
    r = isqrt(n)
    return r if r * r == n else r + 1


def _check_n(n: int) -> None:
    if n < 2:
        raise PreconditionError(f"family parameter must be >= 2, got {n}")


@dataclass(frozen=True)
class BookRegime:
    n: int
    m: int
    regime: str  # "A" or "B"

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "regime": self.regime}


def classify_book(n: int) -> BookRegime:
    """Regime A iff s^2 - s + 2 <= n <= s^2 with s = ceil(sqrt(n)); regime B otherwise."""
    _check_n(n)
    s = ceil_sqrt(n)
    in_a = s * s - s + 2 <= n <= s * s
    in_b = (s - 1) ** 2 < n <= s * s - s + 1
    if in_a == in_b:
        raise InternalInconsistency(f"book regime of n={n} is ambiguous")
    return BookRegime(n, s - 1, "A" if in_a else "B")


def book_d(n: int) -> int:
    _check_n(n)
    return ceil_sqrt(n)


def book_chi_d(n: int) -> int:
    r = classify_book(n)
    return ceil_sqrt(n) + (2 if r.regime == "A" else 1)


def book_chi_dl(n: int) -> int:
    return book_chi_d(n)


def friendship_d(n: int) -> int:
    """Smallest s with C(s, 2) >= n, cross-checked against ceil((1 + sqrt(8n + 1)) / 2)."""
    _check_n(n)
    s = 1
    while comb(s, 2) < n:
        s += 1
    r = isqrt(8 * n + 1)
    if r * r == 8 * n + 1:
        closed = (r + 2) // 2  # ceil((1 + r) / 2)
    else:
        closed = (r + 3) // 2 if r % 2 else (r + 2) // 2
    if closed != s:
        raise InternalInconsistency(f"closed form {closed} disagrees with search {s} at n={n}")
    return s


def friendship_chi_d(n: int) -> int:
    return friendship_d(n) + 1


def friendship_chi_dl(n: int) -> int:
    return friendship_d(n) + 1


def _check_lists(L, n_vertices: int, need: int) -> tuple:
    L = validate_assignment(L, n_vertices)
    if min_list_size(L) < need:
        raise ListError(f"lists need at least {need} colors, shortest has {min_list_size(L)}")
    return L


def book_coloring(n: int, L: Sequence[Sequence[int]], trace: list | None = None) -> Coloring:
    """Proper distinguishing coloring of B_n from ``L``.

    Spine colors are tried in ascending order; for each choice the pages are
    matched to distinct allowed pairs ``(a, b)`` with ``a != b``, ``a`` not the
    color of v_0 and ``b`` not the color of w_0.
    """
    _check_n(n)
    L = _check_lists(L, 2 * n + 2, book_chi_dl(n))
    tried = 0
    for cv in sorted(L[0]):
        for cw in sorted(L[1]):
            if cv == cw:
                continue
            tried += 1
            options = []
            for i in range(1, n + 1):
                lv, lw = sorted(L[2 * i]), sorted(L[2 * i + 1])
                options.append([(a, b) for a in lv for b in lw if a != b and a != cv and b != cw])
            chosen = perfect_matching(options)
            if chosen is None:
                continue
            f = [0] * (2 * n + 2)
            f[0], f[1] = cv, cw
            for i, (a, b) in enumerate(chosen, start=1):
                f[2 * i], f[2 * i + 1] = a, b
            if trace is not None:
                trace.append({"step": "spine", "v0": cv, "w0": cw, "spine_choices_tried": tried})
            return tuple(f)
    raise InternalInconsistency(f"no spine choice admits a page matching for B_{n}")


def friendship_coloring(n: int, L: Sequence[Sequence[int]], trace: list | None = None) -> Coloring:
    """Proper distinguishing coloring of F_n from ``L``: hub color c_w, then each
    triangle base gets a distinct unordered pair avoiding c_w."""
    _check_n(n)
    L = _check_lists(L, 2 * n + 1, friendship_chi_dl(n))
    for cw in sorted(L[0]):
        options = []
        for i in range(1, n + 1):
            la, lb = sorted(L[2 * i - 1]), sorted(L[2 * i])
            pairs = {}
            for a in la:
                for b in lb:
                    if a != b and cw not in (a, b):
                        key = (min(a, b), max(a, b))
                        pairs.setdefault(key, (a, b))
            options.append([(key, pairs[key]) for key in sorted(pairs)])
        # match on the unordered key; remember the oriented pair for the coloring
        keyed = [[k for k, _ in opts] for opts in options]
        chosen = perfect_matching(keyed)
        if chosen is None:
            continue
        f = [0] * (2 * n + 1)
        f[0] = cw
        for i, key in enumerate(chosen, start=1):
            a, b = dict(options[i - 1])[key]
            f[2 * i - 1], f[2 * i] = a, b
        if trace is not None:
            trace.append({"step": "hub", "w": cw})
        return tuple(f)
    raise InternalInconsistency(f"no hub color admits a triangle matching for F_{n}")


def table2_rows(max_n: int) -> list[dict]:
    """Formula values of chi_D and chi_DL for B_n and F_n, 2 <= n <= max_n."""
    rows = []
    for n in range(2, max_n + 1):
        r = classify_book(n)
        rows.append({"graph": "book", "n": n, "regime": r.regime,
                     "chi_d": book_chi_d(n), "chi_dl": book_chi_dl(n)})
    for n in range(2, max_n + 1):
        rows.append({"graph": "friendship", "n": n, "regime": None,
                     "chi_d": friendship_chi_d(n), "chi_dl": friendship_chi_dl(n)})
    return rows
