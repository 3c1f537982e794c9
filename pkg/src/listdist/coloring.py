"""Colorings, list assignments and the three verification predicates."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .errors import ListError
from .graph import Graph
from .symmetry import DEFAULT_MAX_VERTICES, Permutation, colored_automorphism

Coloring = tuple[int, ...]
ListAssignment = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Check:
    """Outcome of a single predicate. Truthy iff it holds; ``witness`` explains a failure."""
    ok: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok


def as_coloring(f: Sequence[int]) -> Coloring:
    return tuple(int(c) for c in f)


def as_assignment(L: Sequence[Sequence[int]]) -> ListAssignment:
    return tuple(tuple(int(c) for c in row) for row in L)


def validate_assignment(L: Sequence[Sequence[int]], n: int | None = None) -> ListAssignment:
    """Normalize ``L`` and reject empty lists, repeats, negative colors or a size mismatch."""
    L = as_assignment(L)
    if n is not None and len(L) != n:
        raise ListError(f"assignment has {len(L)} lists for {n} vertices")
    for v, row in enumerate(L):
        if not row:
            raise ListError(f"list of vertex {v} is empty")
        if len(set(row)) != len(row):
            raise ListError(f"list of vertex {v} repeats a color: {list(row)}")
        if min(row) < 0:
            raise ListError(f"list of vertex {v} has a negative color")
    return L


def _check_domain(G: Graph, f: Sequence[int]) -> None:
    if len(f) != G.n:
        raise ValueError(f"coloring has {len(f)} entries for {G.n} vertices")


def is_proper(G: Graph, f: Sequence[int]) -> Check:
    _check_domain(G, f)
    for u, v in G.sorted_edges():
        if f[u] == f[v]:
            return Check(False, (u, v))
    return Check(True)


def is_compliant(f: Sequence[int], L: Sequence[Sequence[int]]) -> Check:
    if len(f) != len(L):
        raise ValueError("coloring and list assignment have different domains")
    for v, (c, row) in enumerate(zip(f, L)):
        if c not in row:
            return Check(False, v)
    return Check(True)


def preserving_automorphism(G: Graph, f: Sequence[int],
                            max_vertices: int = DEFAULT_MAX_VERTICES) -> Permutation | None:
    """A nontrivial automorphism that preserves ``f``, or None."""
    _check_domain(G, f)
    return colored_automorphism(G, f, max_vertices)


def is_distinguishing(G: Graph, f: Sequence[int], max_vertices: int = DEFAULT_MAX_VERTICES) -> Check:
    p = preserving_automorphism(G, f, max_vertices)
    return Check(p is None, p)


@dataclass(frozen=True)
class VerifyReport:
    proper: bool
    compliant: bool
    distinguishing: bool
    witness: Any = None

    @property
    def ok(self) -> bool:
        return self.proper and self.compliant and self.distinguishing

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        w = self.witness
        if w is not None:
            kind = "edge" if not self.proper else "vertex" if not self.compliant else "automorphism"
            w = {"kind": kind, "value": list(w) if isinstance(w, tuple) else w}
        return {"proper": self.proper, "compliant": self.compliant,
                "distinguishing": self.distinguishing, "witness": w}


def verify(G: Graph, L: Sequence[Sequence[int]], f: Sequence[int],
           max_vertices: int = DEFAULT_MAX_VERTICES) -> VerifyReport:
    """Check ``f`` is proper, drawn from ``L`` and distinguishing; the witness is the
    first failure in that order."""
    if len(L) != G.n:
        raise ValueError(f"assignment has {len(L)} lists for {G.n} vertices")
    p = is_proper(G, f)
    c = is_compliant(f, L)
    d = is_distinguishing(G, f, max_vertices)
    witness = p.witness if not p else c.witness if not c else d.witness
    return VerifyReport(p.ok, c.ok, d.ok, witness)


def init_k(lst: Sequence[int], k: int) -> tuple[int, ...]:
    """First ``k`` entries of an ordered list."""
    if k < 0 or k > len(lst):
        raise ListError(f"cannot take {k} colors from a list of length {len(lst)}")
    return tuple(lst[:k])


def truncate_assignment(L: Sequence[Sequence[int]], k: int) -> ListAssignment:
    return tuple(init_k(row, k) for row in L)


def identical_assignment(n: int, colors: Sequence[int]) -> ListAssignment:
    row = tuple(colors)
    return tuple(row for _ in range(n))


def is_identical(L: Sequence[Sequence[int]]) -> bool:
    return all(set(row) == set(L[0]) for row in L) if L else True


def min_list_size(L: Sequence[Sequence[int]]) -> int:
    return min((len(row) for row in L), default=0)


def distinct_colors(f: Sequence[int]) -> int:
    return len(set(f))
