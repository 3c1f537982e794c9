import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from listdist.coloring import identical_assignment, verify
from listdist.constructive import (PartitionPlan, all_distinct_solver, capped_partition_bound,
                                   capped_partition_coloring, capped_partition_preconditions,
                                   compose_report, lovasz_partition, part_solver, partition_compose)
from listdist.constructive.partition import blocks
from listdist.errors import CompositionError, ListError, PreconditionError
from listdist.generators import complete, cycle, path
from listdist.graph import build_graph, induced_subgraph
from listdist.oracles import sample_assignment

from conftest import graphs


@st.composite
def cap_vectors(draw, delta):
    t = draw(st.integers(1, 4))
    need = max(delta + 1 - t, 0)
    caps = [draw(st.integers(0, delta)) for _ in range(t)]
    while sum(caps) < need:
        i = draw(st.integers(0, t - 1))
        caps[i] += 1
    return caps


@given(graphs(max_n=12), st.data())
def test_lovasz_partition_properties(G, data):
    caps = data.draw(cap_vectors(G.max_degree))
    plan = lovasz_partition(G, caps)
    assert sorted(v for P in plan.parts for v in P) == list(range(G.n))
    assert all(d <= x for d, x in zip(plan.internal_max_degree(G), caps))
    assert plan.moves <= G.m


def test_lovasz_examples():
    plan = lovasz_partition(cycle(5), [1, 1])
    assert plan.parts == [[1, 3, 4], [0, 2]] and plan.moves == 2
    assert plan.to_dict() == {"caps": [1, 1], "parts": [[1, 3, 4], [0, 2]], "moves": 2}
    assert plan.part_of(5) == [1, 0, 1, 0, 0]
    with pytest.raises(PreconditionError):
        lovasz_partition(complete(4), [1, 0])
    with pytest.raises(PreconditionError):
        lovasz_partition(path(3), [])


def test_blocks():
    assert blocks([5, 1, 4, 2, 3], [2, 2]) == [(5, 1), (4, 2)]
    with pytest.raises(ListError):
        blocks([1, 2, 3], [2, 2])


def test_identical_lists_compose():
    rng = random.Random(2)
    for _ in range(50):
        n = rng.randint(3, 10)
        G = build_graph(n, [p for p in itertools.combinations(range(n), 2) if rng.random() < 0.5])
        plan = lovasz_partition(G, [G.max_degree // 2, G.max_degree - G.max_degree // 2])
        solvers = [all_distinct_solver(induced_subgraph(G, P)[0]) for P in plan.parts]
        k = sum(s.budget for s in solvers)
        L = identical_assignment(n, range(k))
        f = partition_compose(G, plan, L, solvers)
        assert verify(G, L, f).ok


def test_cross_part_overlap_is_reported():
    G = path(2)
    plan = PartitionPlan((0, 0), [[0], [1]])
    solvers = [all_distinct_solver(path(1))] * 2
    L = [(7, 1), (8, 7)]
    res = compose_report(G, plan, L, solvers)
    assert not res.disjoint and res.overlap == [(0, 1, [7])]
    with pytest.raises(CompositionError):
        partition_compose(G, plan, L, solvers)


def test_part_solver_choices():
    assert part_solver(path(3), 7).name == "all-distinct"
    assert part_solver(path(8), 7).name == "path"
    assert part_solver(cycle(9), 7).name == "cycle"


def dense_example():
    """K_9 with a perfect matching removed among the first 8 vertices."""
    return build_graph(9, [p for p in itertools.combinations(range(9), 2)
                           if not (p[1] < 8 and p[1] == p[0] + 1 and p[0] % 2 == 0)])


def test_capped_partition_single_part():
    G = dense_example()
    assert capped_partition_preconditions(G, 7) == []
    bound = capped_partition_bound(G.max_degree, 7)
    assert bound == 2 * G.max_degree - 1
    rng = random.Random(0)
    for _ in range(30):
        L = sample_assignment(G.n, bound, rng, universe=bound + 4)
        trace = []
        f = capped_partition_coloring(G, 7, L, trace)
        assert verify(G, L, f).ok and len(set(f)) <= bound
        assert trace[0]["step"] == "partition"


def test_capped_partition_preconditions():
    assert capped_partition_preconditions(cycle(9), 7)[0].startswith("r range")
    with pytest.raises(PreconditionError):
        capped_partition_coloring(cycle(9), 7, identical_assignment(9, range(9)))
    failed = capped_partition_preconditions(complete(12), 7)
    assert any("forbidden" in msg for msg in failed)
