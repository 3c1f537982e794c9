import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from listdist.coloring import is_proper, verify
from listdist.constructive import cycle_of, rooted_tree_coloring, unicyclic_coloring
from listdist.errors import GraphError, ListError, PreconditionError
from listdist.generators import cprime, cycle, cycle_with_pendants, path, star
from listdist.graph import bfs_frame, build_graph
from listdist.oracles import sample_assignment


@st.composite
def trees(draw, max_n=15):
    n = draw(st.integers(2, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    return build_graph(n, [(p, i) for i, p in zip(range(1, n), parents)])


@given(trees(), st.data())
def test_rooted_tree_coloring(T, data):
    root = data.draw(st.integers(0, T.n - 1))
    fr = bfs_frame(T, root)
    need = max([len(fr.siblings(v)) + 2 for v in range(T.n) if v != root], default=1)
    L = data.draw(st.lists(st.lists(st.integers(0, need + 2), min_size=need, max_size=need, unique=True),
                           min_size=T.n, max_size=T.n))
    f = rooted_tree_coloring(T, root, L)
    assert is_proper(T, f) and all(c in L[v] for v, c in enumerate(f))
    for v in range(T.n):
        sibs = fr.siblings(v)
        assert all(f[s] != f[v] for s in sibs)


def test_rooted_tree_errors():
    with pytest.raises(GraphError):
        rooted_tree_coloring(cycle(4), 0, [(0, 1, 2)] * 4)
    with pytest.raises(ListError):
        rooted_tree_coloring(star(3), 0, [(0, 1, 2)] * 4)  # leaves need 2 + 2 colors
    assert rooted_tree_coloring(path(3), 0, [(5,), (0, 1, 5), (0, 5, 6)], {2: [0]}) == (5, 0, 5)


def test_cycle_of():
    G = cycle_with_pendants(7, [(2, 3)])
    assert sorted(cycle_of(G)) == list(range(7))


@pytest.mark.parametrize("G", [cprime(2), cprime(3), cycle_with_pendants(7, [(0, 1)]),
                               cycle_with_pendants(9, [(0, 2), (0, 1), (4, 3), (5, 1)])])
def test_unicyclic_random_lists(G):
    rng = random.Random(G.n)
    k = G.max_degree
    for _ in range(100):
        L = sample_assignment(G.n, k, rng, universe=k + rng.randint(0, 3))
        trace = []
        f = unicyclic_coloring(G, L, trace)
        assert verify(G, L, f).ok
        assert trace[0]["step"] == "cycle"


def test_unicyclic_preconditions():
    with pytest.raises(PreconditionError):
        unicyclic_coloring(cycle_with_pendants(6, [(0, 1)]), [(0, 1, 2)] * 7)
    with pytest.raises(PreconditionError):
        unicyclic_coloring(cycle(8), [(0, 1, 2)] * 8)
    with pytest.raises(PreconditionError):
        unicyclic_coloring(path(5), [(0, 1, 2)] * 5)
    with pytest.raises(ListError):
        unicyclic_coloring(cprime(2), [(0, 1)] * 28)
