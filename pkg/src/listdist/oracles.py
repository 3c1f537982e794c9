"""Exact oracles for the coloring invariants and certified bounds for the list ones.

Invariants: chi (chromatic number), D (distinguishing number), chi_D, Col
(coloring number), and bound certificates for chi_L, D_L and chi_DL.

"For every k-list assignment" is decided by scanning canonical assignments
over the universe {0..nk-1} up to color relabeling. A k-list assignment on n
vertices uses at most nk colors and every predicate here is invariant under
injective recoloring, so the scan is exact.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Any, Iterator, Sequence

from . import kernels
from .coloring import (Coloring, ListAssignment, identical_assignment, validate_assignment,
                       verify)
from .errors import BudgetExceeded, SizeLimitError
from .families import book_chi_dl, book_d, friendship_chi_dl, friendship_d
from .generators import book, friendship
from .graph import (Graph, components, induced_subgraph, is_complete_bipartite,
                    is_connected, is_cycle_graph, is_path_graph, is_unicyclic, girth, k_core)
from .symmetry import DEFAULT_MAX_VERTICES, are_isomorphic, automorphisms, group_profile

PREDICATES = ("proper_distinguishing", "distinguishing", "proper")


@dataclass(frozen=True)
class EnumLimits:
    """Budgets for the exact searches.

    ``exhaustive_budget`` caps the number of canonical assignments scanned per
    k; ``node_limit`` caps each single backtracking search (0 = none);
    ``samples`` random assignments are tried when the scan is cut short.
    """
    max_vertices: int = DEFAULT_MAX_VERTICES
    max_k: int = 12
    exhaustive_budget: int = 2_000_000
    node_limit: int = 0
    samples: int = 2000
    seed: int = 0

    def __post_init__(self):
        for name in ("max_vertices", "max_k", "exhaustive_budget"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.node_limit < 0 or self.samples < 0:
            raise ValueError("node_limit and samples must be non-negative")


DEFAULT_LIMITS = EnumLimits()


def _check_size(G: Graph, limits: EnumLimits) -> None:
    if G.n > limits.max_vertices:
        raise SizeLimitError(f"graph has {G.n} vertices, oracle bound is {limits.max_vertices}")


@lru_cache(maxsize=256)
def _prepared(G: Graph, with_auts: bool) -> kernels.Prepared:
    return kernels.prepare(G, automorphisms(G) if with_auts else ())


def _solve(G: Graph, L: Sequence[Sequence[int]], predicate: str, node_limit: int = 0,
           rgs: bool = False) -> Coloring | None:
    if predicate not in PREDICATES:
        raise ValueError(f"unknown predicate {predicate!r}")
    prep = _prepared(G, predicate != "proper")
    status, f, _ = kernels.search(prep, L, proper=predicate != "distinguishing",
                                  rgs=rgs, node_limit=node_limit)
    if status == -1:
        raise BudgetExceeded(f"search exceeded {node_limit} nodes")
    return f


def _min_identical(G: Graph, predicate: str, limits: EnumLimits) -> int:
    _check_size(G, limits)
    if G.n == 0:
        return 0
    k = 1
    while True:
        L = identical_assignment(G.n, range(k))
        if _solve(G, L, predicate, limits.node_limit, rgs=True) is not None:
            return k
        k += 1


def chromatic_number(G: Graph, limits: EnumLimits = DEFAULT_LIMITS) -> int:
    return _min_identical(G, "proper", limits)


def distinguishing_number(G: Graph, limits: EnumLimits = DEFAULT_LIMITS) -> int:
    return _min_identical(G, "distinguishing", limits)


def chi_d(G: Graph, limits: EnumLimits = DEFAULT_LIMITS) -> int:
    return _min_identical(G, "proper_distinguishing", limits)


def coloring_number(G: Graph) -> tuple[int, list[int]]:
    """``(Col(G), ordering)``: Col is degeneracy + 1; in ``ordering`` every vertex
    has fewer than Col neighbors before it (reverse of min-degree deletion)."""
    if G.n == 0:
        return 0, []
    deg = [G.degree(v) for v in range(G.n)]
    alive = [True] * G.n
    deleted = []
    degeneracy = 0
    for _ in range(G.n):
        v = min((u for u in range(G.n) if alive[u]), key=lambda u: (deg[u], u))
        degeneracy = max(degeneracy, deg[v])
        alive[v] = False
        deleted.append(v)
        for w in G.adj[v]:
            if alive[w]:
                deg[w] -= 1
    return degeneracy + 1, deleted[::-1]


# -- canonical list assignments -------------------------------------------------


def _ordered_rows(k: int, m: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Ordered k-lists where fresh colors appear as m, m+1, ... in order."""
    def rec(prefix: tuple[int, ...], m_now: int):
        if len(prefix) == k:
            yield prefix, m_now
            return
        used = set(prefix)
        for c in range(m_now):
            if c not in used:
                yield from rec(prefix + (c,), m_now)
        yield from rec(prefix + (m_now,), m_now + 1)
    yield from rec((), m)


def _unordered_rows(k: int, m: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Sorted k-lists made of old colors below m plus the fresh block m..m+t-1."""
    for t in range(k + 1):
        if k - t > m:
            continue
        fresh = tuple(range(m, m + t))
        for old in combinations(range(m), k - t):
            yield old + fresh, m + t


def canonical_assignments(n: int, k: int, ordered: bool = True,
                          budget: int | None = None) -> Iterator[ListAssignment]:
    """Every k-list assignment on n vertices up to color relabeling.

    A color id may appear only once every smaller id has appeared at an earlier
    vertex or earlier in the same list. ``ordered=True`` treats lists as
    sequences (init_k is order sensitive); ``ordered=False`` treats them as
    sets, which is all the coloring predicates need. Raises BudgetExceeded
    after ``budget`` assignments.
    """
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    rows = _ordered_rows if ordered else _unordered_rows
    count = 0

    def rec(i: int, m: int, acc: tuple):
        nonlocal count
        if i == n:
            count += 1
            if budget is not None and count > budget:
                raise BudgetExceeded(f"more than {budget} canonical assignments")
            yield acc
            return
        for row, m2 in rows(k, m):
            yield from rec(i + 1, m2, acc + (row,))

    yield from rec(0, 0, ())


def canonicalize(L: Sequence[Sequence[int]], ordered: bool = True) -> ListAssignment:
    """Relabel colors by first appearance so the result is in canonical form."""
    ids: dict[int, int] = {}
    out = []
    for row in L:
        if ordered:
            for c in row:
                ids.setdefault(c, len(ids))
            out.append(tuple(ids[c] for c in row))
        else:
            for c in sorted(c for c in row if c not in ids):
                ids[c] = len(ids)
            out.append(tuple(sorted(ids[c] for c in row)))
    return tuple(out)


def sample_assignment(n: int, k: int, rng: random.Random, universe: int | None = None) -> ListAssignment:
    """Uniform random k-subsets of {0..universe-1} in random order (universe defaults to nk)."""
    u = universe if universe is not None else n * k
    if u < k:
        raise ValueError("universe smaller than list size")
    return tuple(tuple(rng.sample(range(u), k)) for _ in range(n))


# -- existence queries ---------------------------------------------------------------


def _prepare_query(G: Graph, L, limits: EnumLimits) -> ListAssignment:
    _check_size(G, limits)
    return validate_assignment(L, G.n)


def _rgs_ok(L: ListAssignment) -> bool:
    return all(row == L[0] for row in L)


def exists_proper_distinguishing(G: Graph, L: Sequence[Sequence[int]],
                                 limits: EnumLimits = DEFAULT_LIMITS) -> Coloring | None:
    L = _prepare_query(G, L, limits)
    return _solve(G, L, "proper_distinguishing", limits.node_limit, rgs=_rgs_ok(L))


def exists_distinguishing(G: Graph, L: Sequence[Sequence[int]],
                          limits: EnumLimits = DEFAULT_LIMITS) -> Coloring | None:
    L = _prepare_query(G, L, limits)
    return _solve(G, L, "distinguishing", limits.node_limit, rgs=_rgs_ok(L))


def exists_proper(G: Graph, L: Sequence[Sequence[int]],
                  limits: EnumLimits = DEFAULT_LIMITS) -> Coloring | None:
    L = _prepare_query(G, L, limits)
    return _solve(G, L, "proper", limits.node_limit, rgs=_rgs_ok(L))


def exists_coloring(G: Graph, L, predicate: str, limits: EnumLimits = DEFAULT_LIMITS) -> Coloring | None:
    return {"proper_distinguishing": exists_proper_distinguishing,
            "distinguishing": exists_distinguishing,
            "proper": exists_proper}[predicate](G, L, limits)


def naive_exists(G: Graph, L: Sequence[Sequence[int]], predicate: str = "proper_distinguishing"
                 ) -> Coloring | None:
    """Unpruned reference: try every choice tuple in list order and run ``verify``."""
    for f in product(*L):
        rep = verify(G, L, f)
        ok = {"proper_distinguishing": rep.ok,
              "distinguishing": rep.compliant and rep.distinguishing,
              "proper": rep.proper and rep.compliant}[predicate]
        if ok:
            return tuple(f)
    return None


# -- adversarial search for bad assignments ---------------------------------------------


@dataclass(frozen=True)
class BadSearch:
    """Outcome of looking for a k-list assignment with no valid coloring.

    ``complete`` is True when the absence of a bad assignment is proven.
    """
    k: int
    assignment: ListAssignment | None
    method: str | None
    complete: bool
    checked: int = 0


def _extend_core_lists(G: Graph, core: list[int], core_lists, k: int) -> ListAssignment:
    top = max((c for row in core_lists for c in row), default=-1) + 1
    out: list[tuple[int, ...]] = [tuple(range(top, top + k))] * G.n
    for i, v in enumerate(core):
        out[v] = tuple(core_lists[i])
    return tuple(out)


def find_bad_assignment(G: Graph, k: int, predicate: str = "proper_distinguishing",
                        limits: EnumLimits = DEFAULT_LIMITS) -> BadSearch:
    """Look for a k-list assignment admitting no coloring satisfying ``predicate``.

    Order: identical lists, then (for proper predicates) an exhaustive scan of
    the k-core, then the full canonical scan within budget, then random samples.
    """
    _check_size(G, limits)
    if G.n == 0:
        return BadSearch(k, None, None, True)
    ident = identical_assignment(G.n, range(k))
    if _solve(G, ident, predicate, limits.node_limit, rgs=True) is None:
        return BadSearch(k, ident, "identical", True, 1)
    checked = 1
    if predicate != "distinguishing":
        core = k_core(G, k)
        if not core and predicate == "proper":
            # degeneracy below k: greedy in reverse deletion order always succeeds
            return BadSearch(k, None, "degenerate", True, checked)
        if core:
            H, back = induced_subgraph(G, core)
            status, bad, n_checked = kernels.find_bad(
                _prepared(H, False), k, proper=True, budget=limits.exhaustive_budget,
                node_limit=limits.node_limit)
            checked += n_checked
            if status == 1:
                return BadSearch(k, _extend_core_lists(G, back, bad, k), "core", True, checked)
            if status == 0 and predicate == "proper":
                return BadSearch(k, None, "core", True, checked)
    status, bad, n_checked = kernels.find_bad(
        _prepared(G, predicate != "proper"), k, proper=predicate != "distinguishing",
        budget=limits.exhaustive_budget, node_limit=limits.node_limit)
    checked += n_checked
    if status == 1:
        return BadSearch(k, bad, "exhaustive", True, checked)
    if status == 0:
        return BadSearch(k, None, "exhaustive", True, checked)
    rng = random.Random(limits.seed)
    for _ in range(limits.samples):
        L = sample_assignment(G.n, k, rng, min(G.n * k, max(2 * k, 30)))
        checked += 1
        try:
            if _solve(G, L, predicate, limits.node_limit) is None:
                return BadSearch(k, L, "sampled", True, checked)
        except BudgetExceeded:
            continue
    return BadSearch(k, None, None, False, checked)


# -- certificates --------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundsCertificate:
    """Certified ``lower <= value <= upper`` for a list invariant.

    ``lower_witness`` is an assignment with lists of size ``lower - 1`` that
    admits no valid coloring, or ``"identical"`` when identical lists already
    fail, or ``"trivial"`` for ``lower <= 1``. ``upper_tag`` is one of
    exhaustive, constructive or formula; ``upper_rule`` names the rule.
    """
    invariant: str
    lower: int
    lower_witness: Any
    upper: int
    upper_tag: str
    upper_rule: str = ""
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"lower {self.lower} exceeds upper {self.upper}")
        if self.upper_tag not in ("exhaustive", "constructive", "formula"):
            raise ValueError(f"bad upper tag {self.upper_tag!r}")

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int | None:
        return self.lower if self.exact else None

    def merge(self, other: "BoundsCertificate") -> "BoundsCertificate":
        if other.invariant != self.invariant:
            raise ValueError("cannot merge certificates of different invariants")
        lo = self if self.lower >= other.lower else other
        hi = self if self.upper <= other.upper else other
        return BoundsCertificate(self.invariant, lo.lower, lo.lower_witness, hi.upper,
                                 hi.upper_tag, hi.upper_rule, self.notes + other.notes)

    def to_dict(self) -> dict:
        w = self.lower_witness
        if not isinstance(w, str):
            w = [list(row) for row in w]
        return {"invariant": self.invariant, "lower": self.lower, "lower_witness": w,
                "upper": self.upper, "upper_tag": self.upper_tag,
                "upper_rule": self.upper_rule, "exact": self.exact}


def _lower_from_identical(invariant: str, value: int) -> tuple[int, Any]:
    return value, ("trivial" if value <= 1 else "identical")


def _tighten(G: Graph, cert: BoundsCertificate, predicate: str, limits: EnumLimits) -> BoundsCertificate:
    """Close the gap k = lower..upper-1 by bad-assignment search."""
    lower, witness = cert.lower, cert.lower_witness
    upper, tag, rule = cert.upper, cert.upper_tag, cert.upper_rule
    notes = list(cert.notes)
    k = lower
    while k < upper:
        if k > limits.max_k:
            notes.append(f"k={k} above max_k")
            break
        res = find_bad_assignment(G, k, predicate, limits)
        if res.assignment is not None:
            lower, witness = k + 1, res.assignment
            k += 1
            continue
        if res.complete:
            upper, tag, rule = k, "exhaustive", f"no bad {k}-assignment ({res.method})"
        else:
            notes.append(f"k={k} undecided after {res.checked} assignments")
        break
    return BoundsCertificate(cert.invariant, lower, witness, upper, tag, rule, tuple(notes))


def is_two_choosable(G: Graph) -> bool:
    """Erdős–Rubin–Taylor: each component's core (after pruning leaves) is K_1,
    an even cycle, or theta(2, 2, 2m)."""
    core_vertices = set(k_core(G, 2))
    for comp in components(G):
        part = [v for v in comp if v in core_vertices]
        if not part:
            continue
        H, _ = induced_subgraph(G, part)
        if not is_connected(H):
            return False
        if is_cycle_graph(H):
            if H.n % 2:
                return False
            continue
        deg3 = [v for v in range(H.n) if H.degree(v) == 3]
        if len(deg3) != 2 or any(H.degree(v) not in (2, 3) for v in range(H.n)):
            return False
        a, b = deg3
        lengths = []
        for start in sorted(H.adj[a]):
            prev, cur, steps = a, start, 1
            while cur != b:
                nxt = [w for w in H.adj[cur] if w != prev]
                if len(nxt) != 1:
                    return False
                prev, cur, steps = cur, nxt[0], steps + 1
            lengths.append(steps)
        lengths.sort()
        if not (lengths[0] == 2 and lengths[1] == 2 and lengths[2] % 2 == 0):
            return False
    return True


def chi_l_bounds(G: Graph, limits: EnumLimits = DEFAULT_LIMITS) -> BoundsCertificate:
    _check_size(G, limits)
    lower, witness = _lower_from_identical("chi_l", chromatic_number(G, limits))
    col, _ = coloring_number(G)
    cert = BoundsCertificate("chi_l", lower, witness, col, "constructive", "greedy in degeneracy order")
    if lower <= 2 and G.n and is_two_choosable(G):
        cert = cert.merge(BoundsCertificate("chi_l", lower, witness, 2, "formula", "2-choosable core"))
    if cert.exact:
        return cert
    return _tighten(G, cert, "proper", limits)


def d_l_bounds(G: Graph, limits: EnumLimits = DEFAULT_LIMITS) -> BoundsCertificate:
    _check_size(G, limits)
    lower, witness = _lower_from_identical("d_l", distinguishing_number(G, limits))
    cert = BoundsCertificate("d_l", lower, witness, max(G.n, lower), "constructive", "all distinct")
    if lower == 1 and len(automorphisms(G, limits.max_vertices)) == 1:
        return cert.merge(BoundsCertificate("d_l", 1, witness, 1, "formula", "asymmetric"))
    fam = recognize_family(G)
    if fam and fam[0] == "book":
        cert = cert.merge(BoundsCertificate("d_l", lower, witness, book_d(fam[1]), "formula", "book"))
    elif fam and fam[0] == "friendship":
        cert = cert.merge(BoundsCertificate("d_l", lower, witness, friendship_d(fam[1]),
                                            "formula", "friendship"))
    if cert.exact:
        return cert
    return _tighten(G, cert, "distinguishing", limits)


def _table1_value(G: Graph) -> tuple[int, str] | None:
    if is_path_graph(G):
        n = G.n
        return (1 if n == 1 else 2 if n % 2 == 0 else 3), f"path P_{n}"
    if is_cycle_graph(G):
        n = G.n
        return {3: 3, 4: 4, 5: 3, 6: 4}.get(n, 3), f"cycle C_{n}"
    return None


def chi_dl_upper_rules(G: Graph, lower: int, limits: EnumLimits) -> list[tuple[int, str, str]]:
    """Upper bounds for chi_DL known without enumeration, cheapest first.

    Each entry is ``(value, tag, rule)``; evaluation stops once a rule meets ``lower``.
    """
    rules: list[tuple[int, str, str]] = [(G.n, "constructive", "all distinct")]

    def done():
        return min(r[0] for r in rules) <= lower

    t1 = _table1_value(G)
    if t1:
        rules.append((t1[0], "constructive", t1[1]))
    fam = recognize_family(G)
    if fam and fam[0] == "book":
        rules.append((book_chi_dl(fam[1]), "formula", "book"))
    if fam and fam[0] == "friendship":
        rules.append((friendship_chi_dl(fam[1]), "formula", "friendship"))
    if done():
        return rules
    delta = G.max_degree
    if is_connected(G) and delta >= 3 and not (is_complete_bipartite(G) and G.n == 2 * delta
                                                and G.m == delta * delta):
        rules.append((2 * delta - 1, "constructive", "2*maxdeg-1"))
    if is_unicyclic(G) and girth(G) >= 7 and delta >= 3:
        rules.append((delta, "constructive", "unicyclic girth>=7"))
    if done():
        return rules
    auts = automorphisms(G, limits.max_vertices)
    if len(auts) == 1:
        cl = chi_l_bounds(G, limits)
        rules.append((cl.upper, cl.upper_tag, f"asymmetric, chi_L <= {cl.upper}"))
        return rules
    col, _ = coloring_number(G)
    if done():
        return rules
    prof = group_profile(auts)
    if prof.cyclic and prof.prime_power_order is not None:
        cl = chi_l_bounds(G, limits)
        if cl.exact:
            rules.append((cl.upper + 1, "constructive", "cyclic prime-power Aut, chi_L+1"))
    if done():
        return rules
    dl = d_l_bounds(G, limits)
    if dl.exact:
        rules.append((col * dl.upper, "constructive", "Col*D_L"))
    return rules


def chi_dl_bounds(G: Graph, limits: EnumLimits = DEFAULT_LIMITS) -> BoundsCertificate:
    _check_size(G, limits)
    if G.n == 0:
        return BoundsCertificate("chi_dl", 0, "trivial", 0, "formula", "empty graph")
    lower, witness = _lower_from_identical("chi_dl", chi_d(G, limits))
    rules = chi_dl_upper_rules(G, lower, limits)
    tag_rank = {"constructive": 0, "formula": 1, "exhaustive": 2}
    # ties go to the more specific (later) rule
    _, (value, tag, rule) = min(enumerate(rules), key=lambda ir: (ir[1][0], tag_rank[ir[1][1]], -ir[0]))
    cert = BoundsCertificate("chi_dl", lower, witness, max(value, lower), tag, rule)
    if cert.exact:
        return cert
    return _tighten(G, cert, "proper_distinguishing", limits)


# -- family recognition ---------------------------------------------------------------------


def recognize_family(G: Graph) -> tuple | None:
    """``(family, *params)`` when ``G`` is isomorphic to a generated family member."""
    n, m = G.n, G.m
    if n == 0:
        return None
    if is_path_graph(G):
        return ("path", n)
    if is_cycle_graph(G):
        return ("cycle", n)
    if m == n * (n - 1) // 2:
        return ("complete", n)
    if is_complete_bipartite(G):
        # a vertex on one side has the other side as its neighborhood
        b = G.min_degree
        a = n - b
        return ("complete_bipartite", min(a, b), max(a, b))
    if n % 2 == 0 and n >= 6 and m == 3 * ((n - 2) // 2) + 1:
        p = (n - 2) // 2
        if are_isomorphic(G, book(p)):
            return ("book", p)
    if n % 2 == 1 and n >= 5 and m == 3 * ((n - 1) // 2):
        p = (n - 1) // 2
        if are_isomorphic(G, friendship(p)):
            return ("friendship", p)
    return None
