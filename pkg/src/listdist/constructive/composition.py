"""Colorings built from other invariants.

* ``col_dl_coloring``: lists of size Col(G) * D_L(G). Walking a degeneracy
  order, each vertex keeps D_L colors of its list that no earlier neighbor
  kept; a distinguishing coloring from these disjoint sublists is proper.
* ``prime_power_recolor``: Aut(G) cyclic of prime-power order and lists of
  size chi_L + 1. Color properly from the first chi_L entries, then give one
  vertex moved by the order-p subgroup its spare color.
* ``join_compose``: color each part of a join from its own block of the lists.
"""
from __future__ import annotations

from dataclasses import replace
from typing import Sequence

from ..coloring import Coloring, init_k, truncate_assignment, validate_assignment, verify
from ..errors import CompositionError, InternalInconsistency, ListError, PreconditionError
from ..graph import Graph, has_triangle, is_complete_bipartite, join, part_blocks
from ..oracles import (DEFAULT_LIMITS, EnumLimits, chi_dl_bounds, chi_l_bounds, coloring_number,
                       d_l_bounds, exists_distinguishing, exists_proper,
                       exists_proper_distinguishing)
from ..symmetry import are_isomorphic, automorphisms, generator, group_profile, is_identity, power
from .common import certify, checked_lists, note
from .partition import PartitionPlan, PartSolver, compose_report


def col_dl_coloring(G: Graph, L: Sequence[Sequence[int]], limits: EnumLimits = DEFAULT_LIMITS,
                    trace: list | None = None) -> Coloring:
    col, order = coloring_number(G)
    dl = d_l_bounds(G, limits)
    if not dl.exact:
        raise PreconditionError(f"D_L not determined exactly ({dl.lower}..{dl.upper})")
    d = dl.upper
    L = checked_lists(G, L, col * d)
    sub: list[tuple[int, ...]] = [()] * G.n
    placed: set[int] = set()
    for v in order:
        taken = set().union(*(sub[u] for u in G.adj[v] if u in placed))
        X = [c for c in L[v] if c not in taken]
        sub[v] = init_k(X, d)  # |X| >= d(Col - earlier neighbors) >= d
        placed.add(v)
    note(trace, step="sublists", col=col, d_l=d, order=order)
    f = exists_distinguishing(G, sub, limits)
    if f is None:
        raise InternalInconsistency(f"no distinguishing coloring from sublists of size D_L = {d}")
    return certify(G, L, f, "col_dl_coloring")


def prime_power_recolor(G: Graph, L: Sequence[Sequence[int]], limits: EnumLimits = DEFAULT_LIMITS,
                        trace: list | None = None) -> Coloring:
    auts = automorphisms(G, limits.max_vertices)
    cl = chi_l_bounds(G, limits)
    if not cl.exact:
        raise PreconditionError(f"chi_L not determined exactly ({cl.lower}..{cl.upper})")
    k = cl.upper
    L = validate_assignment(L, G.n)
    if len(auts) == 1:
        L = checked_lists(G, L, k)
        f = exists_proper(G, truncate_assignment(L, k), limits)
        if f is None:
            raise InternalInconsistency(f"chi_L = {k} but no proper coloring from the first {k} entries")
        note(trace, step="asymmetric", recolored=None)
        return certify(G, L, f, "prime_power_recolor")
    prof = group_profile(auts)
    if not (prof.cyclic and prof.prime_power_order):
        raise PreconditionError(f"automorphism group of order {prof.order} is not cyclic of prime-power order")
    p, m = prof.prime_power_order
    L = checked_lists(G, L, k + 1)
    L = truncate_assignment(L, k + 1)
    short = truncate_assignment(L, k)
    f = exists_proper(G, short, limits)
    if f is None:
        raise InternalInconsistency(f"chi_L = {k} but no proper coloring from the first {k} entries")
    sigma = generator(auts)
    tau = power(sigma, p ** (m - 1))  # type: ignore[arg-type]
    if is_identity(tau):
        raise InternalInconsistency("order-p element is trivial")
    orbit = _orbits(auts, G.n)
    for v in range(G.n):
        if tau[v] == v:
            continue
        c = L[v][k]  # the one entry outside the truncated list
        clash_nbr = any(f[u] == c for u in G.adj[v])
        clash_orbit = any(f[u] == c for u in orbit[v] if u != v)
        if clash_nbr or clash_orbit:
            note(trace, step="skip", vertex=v, color=c,
                 reason="neighbor has it" if clash_nbr else "orbit-mate has it")
            continue
        g = list(f)
        g[v] = c
        note(trace, step="recolor", vertex=v, color=c, p=p, m=m)
        return certify(G, L, g, "prime_power_recolor")
    raise InternalInconsistency("no vertex moved by the order-p subgroup can take its spare color")


def _orbits(auts, n: int) -> list[set[int]]:
    return [{a[v] for a in auts} for v in range(n)]


def check_join_parts(parts: Sequence[Graph], max_vertices: int = 64) -> None:
    for i, H in enumerate(parts):
        if has_triangle(H):
            raise PreconditionError(f"part {i} contains a triangle")
        if is_complete_bipartite(H):
            raise PreconditionError(f"part {i} is complete bipartite")
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            if are_isomorphic(parts[i], parts[j], max_vertices):
                raise PreconditionError(f"parts {i} and {j} are isomorphic")


def default_part_solver(H: Graph, limits: EnumLimits = DEFAULT_LIMITS) -> PartSolver:
    """Cyclic prime-power or trivial Aut: chi_L + 1 (chi_L if trivial); otherwise
    the exact chi_DL with the exact search."""
    auts = automorphisms(H, limits.max_vertices)
    if len(auts) == 1:
        k = chi_l_bounds(H, limits).upper
        return PartSolver(k, lambda H, L: prime_power_recolor(H, L, limits), "prime-power")
    prof = group_profile(auts)
    if prof.cyclic and prof.prime_power_order:
        k = chi_l_bounds(H, limits).upper + 1
        return PartSolver(k, lambda H, L: prime_power_recolor(H, L, limits), "prime-power")
    cert = chi_dl_bounds(H, limits)
    if not cert.exact:
        raise PreconditionError("part has no exact chi_DL and no structured solver")

    def solve(H, L):
        f = exists_proper_distinguishing(H, L, limits)
        if f is None:
            raise InternalInconsistency("exact chi_DL solver found no coloring")
        return f
    return PartSolver(cert.upper, solve, "exact")


def join_compose(parts: Sequence[Graph], L: Sequence[Sequence[int]],
                 solvers: Sequence[PartSolver] | None = None,
                 limits: EnumLimits = DEFAULT_LIMITS, trace: list | None = None) -> Coloring:
    """Color ``join(parts)``; part i uses the i-th block of every list.

    Raises CompositionError when two parts end up sharing a color (every
    cross pair is an edge, so the result would not be proper).
    """
    G = join(parts)
    big = replace(limits, max_vertices=max(limits.max_vertices, G.n))
    check_join_parts(parts, big.max_vertices)
    if solvers is None:
        solvers = [default_part_solver(H, limits) for H in parts]
    budgets = [s.budget for s in solvers]
    L = validate_assignment(L, G.n)
    if min(len(x) for x in L) < sum(budgets):
        raise ListError(f"lists need {sum(budgets)} colors (part budgets {budgets})")
    plan = PartitionPlan(tuple(H.max_degree for H in parts), [list(b) for b in part_blocks(parts)])
    res = compose_report(G, plan, L, solvers, trace)
    if not res.disjoint:
        raise CompositionError(f"parts share colors: {res.overlap}")
    rep = verify(G, L, res.coloring, big.max_vertices)
    if not rep.ok:
        raise CompositionError(f"join coloring is invalid: {rep.to_dict()}")
    return res.coloring
