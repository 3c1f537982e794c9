"""Generators for the graph families used throughout the package.

Vertex numbering per family:

* ``path(n)``, ``cycle(n)``: consecutive, ``i ~ i+1`` (and ``n-1 ~ 0`` for cycles).
* ``complete_bipartite(a, b)``: side A is ``0..a-1``, side B is ``a..a+b-1``.
* ``star(n)``: centre 0, leaves ``1..n``.
* ``book(n)``: ``v_0 = 0``, ``w_0 = 1``, then page ``i`` (1-based) is ``v_i = 2i``, ``w_i = 2i + 1``.
* ``friendship(n)``: hub ``w = 0``; triangle ``i`` (1-based) has base ``2i - 1``, ``2i``.
* ``cprime(n)``: cycle ``x_1..x_{4n}`` are ``0..4n-1``; then for ``k = 1..4n`` in order
  the pendant path hung on ``x_k`` (``r`` vertices with ``r = k mod 4`` and ``r = 4``
  when ``k`` is a multiple of 4), nearest-to-cycle vertex first.
* ``cycle_with_pendants(c, pendants)``: cycle ``0..c-1``, then each pendant path in order.
* ``figure1()``: ``v_0..v_5 = 0..5`` and ``s_0..s_6 = 6..12``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import GraphError
from .graph import Graph, build_graph

FAMILIES = ("path", "cycle", "complete", "complete_bipartite", "star", "book",
            "friendship", "cprime", "figure1")

ARITY = {"path": 1, "cycle": 1, "complete": 1, "complete_bipartite": 2, "star": 1,
          "book": 1, "friendship": 1, "cprime": 1, "figure1": 0}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.family not in ARITY:
            raise GraphError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if len(self.params) != ARITY[self.family]:
            raise GraphError(f"{self.family} takes {ARITY[self.family]} parameter(s), "
                             f"got {len(self.params)}")
        _check_range(self.family, self.params)

    def __str__(self) -> str:
        return f"{self.family}({', '.join(map(str, self.params))})"


def _check_range(family: str, params: tuple[int, ...]) -> None:
    low = {"path": 1, "cycle": 3, "complete": 1, "star": 1, "book": 2,
           "friendship": 2, "cprime": 2}
    if family == "complete_bipartite":
        if min(params) < 1:
            raise GraphError("complete_bipartite needs both sides >= 1")
    elif family in low and params[0] < low[family]:
        raise GraphError(f"{family} needs parameter >= {low[family]}, got {params[0]}")


def path(n: int) -> Graph:
    _check_range("path", (n,))
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _check_range("cycle", (n,))
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _check_range("complete", (n,))
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    _check_range("complete_bipartite", (a, b))
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(n: int) -> Graph:
    _check_range("star", (n,))
    return build_graph(n + 1, [(0, i) for i in range(1, n + 1)])


def book(n: int) -> Graph:
    _check_range("book", (n,))
    edges = [(0, 1)]
    for i in range(1, n + 1):
        v, w = 2 * i, 2 * i + 1
        edges += [(0, v), (1, w), (v, w)]
    return build_graph(2 * n + 2, edges)


def friendship(n: int) -> Graph:
    _check_range("friendship", (n,))
    edges = []
    for i in range(1, n + 1):
        a, b = 2 * i - 1, 2 * i
        edges += [(0, a), (0, b), (a, b)]
    return build_graph(2 * n + 1, edges)


def pendant_length(k: int) -> int:
    """Pendant path length hung on cycle vertex ``x_k`` (1-based) of ``cprime``."""
    r = k % 4
    return 4 if r == 0 else r


def cprime(n: int) -> Graph:
    _check_range("cprime", (n,))
    m = 4 * n
    edges = [(i, (i + 1) % m) for i in range(m)]
    nxt = m
    for k in range(1, m + 1):
        prev = k - 1
        for _ in range(pendant_length(k)):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(nxt, edges)


FIGURE1_LABELS = ("v0", "v1", "v2", "v3", "v4", "v5",
                  "s0", "s1", "s2", "s3", "s4", "s5", "s6")

_F = {name: i for i, name in enumerate(FIGURE1_LABELS)}

FIGURE1_EDGES = tuple(sorted(
    (min(_F[a], _F[b]), max(_F[a], _F[b])) for a, b in [
        ("v0", "v1"), ("v0", "v2"), ("v0", "v3"), ("v0", "v4"),
        ("v5", "v1"), ("v5", "v2"), ("v5", "v3"), ("v5", "v4"), ("v5", "s6"),
        ("s0", "s1"), ("s1", "s2"), ("s2", "v1"),
        ("s3", "v2"),
        ("v4", "s4"), ("s4", "s5"),
    ]))


def cycle_with_pendants(cycle_len: int, pendants: Sequence[tuple[int, int]]) -> Graph:
    """Cycle 0..cycle_len-1 with a pendant path of ``length`` at each ``(vertex, length)``."""
    edges = [(i, (i + 1) % cycle_len) for i in range(cycle_len)]
    n = cycle_len
    for v, length in pendants:
        prev = v
        for _ in range(length):
            edges.append((prev, n))
            prev = n
            n += 1
    return build_graph(n, edges)


def figure1() -> Graph:
    """Thirteen-vertex asymmetric bipartite graph whose list version needs 3 colors
    although 2 suffice with identical lists."""
    return build_graph(13, FIGURE1_EDGES)


_BUILDERS = {"path": path, "cycle": cycle, "complete": complete,
             "complete_bipartite": complete_bipartite, "star": star, "book": book,
             "friendship": friendship, "cprime": cprime, "figure1": figure1}


def gen_family(spec: FamilySpec | str, *params: int) -> Graph:
    """Build a family member, e.g. ``gen_family(FamilySpec("book", (4,)))`` or ``gen_family("book", 4)``."""
    if isinstance(spec, str):
        spec = FamilySpec(spec, tuple(int(p) for p in params))
    return _BUILDERS[spec.family](*spec.params)
