import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from listdist.errors import DisconnectedError, GraphError
from listdist.generators import complete, complete_bipartite, cycle, figure1, path, star
from listdist.graph import (bfs_frame, build_graph, cartesian_product, components,
                            contains_complete_bipartite, cycle_order, disjoint_union, girth,
                            induced_subgraph, is_bipartite, is_complete_bipartite, is_connected,
                            is_k_connected, is_tree, is_unicyclic, join, k_core, part_blocks,
                            path_order, relabel, remove_vertices, search_order, structure_report)

from conftest import graphs


def test_build_graph_normalizes_and_dedupes():
    G = build_graph(3, [(1, 0), (0, 1), (2, 1)])
    assert G.sorted_edges() == [(0, 1), (1, 2)]
    assert G.degree(1) == 2 and G.m == 2


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)], [(0, 1, 2)]])
def test_build_graph_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        build_graph(3, edges)


def test_relabel_and_products():
    G = relabel(path(3), [2, 0, 1])
    assert G.sorted_edges() == [(0, 1), (0, 2)]
    B = cartesian_product(star(2), path(2))
    assert (B.n, B.m) == (6, 7)
    U = disjoint_union([cycle(3), path(2)])
    assert (U.n, U.m) == (5, 4) and len(components(U)) == 2
    J = join([path(2), path(3)])
    assert (J.n, J.m) == (5, 1 + 2 + 6)
    assert [list(r) for r in part_blocks([path(2), path(3)])] == [[0, 1], [2, 3, 4]]


def test_induced_and_removed():
    H, back = induced_subgraph(cycle(5), [4, 0, 1])
    assert back == [0, 1, 4] and H.sorted_edges() == [(0, 1), (0, 2)]
    H, back = remove_vertices(cycle(5), [2])
    assert is_tree(H) and back == [0, 1, 3, 4]


def test_structure_report_examples():
    r = structure_report(cycle(7))
    assert r["girth"] == 7 and r["unicyclic"] and r["max_degree"] == 2
    r = structure_report(figure1())
    assert r["bipartite"] and not r["tree"] and r["girth"] == 4
    assert math.isinf(girth(path(5)))


def test_connectivity_and_cores():
    assert is_k_connected(complete(5), 4) and not is_k_connected(complete(5), 5)
    assert is_k_connected(cycle(6), 2) and not is_k_connected(cycle(6), 3)
    assert not is_k_connected(path(4), 2)
    assert k_core(figure1(), 2) == sorted(k_core(figure1(), 2))
    assert k_core(path(5), 2) == []
    assert set(k_core(build_graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]), 2)) == {0, 1, 2}


def test_complete_bipartite_checks():
    assert is_complete_bipartite(complete_bipartite(2, 3))
    assert not is_complete_bipartite(cycle(6))
    assert is_complete_bipartite(cycle(4))
    assert contains_complete_bipartite(complete(6), 3)
    assert not contains_complete_bipartite(cycle(8), 2)
    assert contains_complete_bipartite(complete_bipartite(3, 4), 3)


def test_orders():
    assert path_order(relabel(path(4), [3, 1, 0, 2])) == [2, 0, 1, 3]
    assert cycle_order(cycle(5), start=2, towards=1) == [2, 1, 0, 4, 3]
    with pytest.raises(GraphError):
        cycle_order(cycle(5), start=0, towards=2)


def test_bfs_frame_requires_connected():
    with pytest.raises(DisconnectedError):
        bfs_frame(disjoint_union([path(2), path(2)]), 0)


@given(graphs(max_n=9, connected=True), st.data())
def test_bfs_frame_is_a_layered_spanning_tree(G, data):
    root = data.draw(st.integers(0, G.n - 1))
    fr = bfs_frame(G, root)
    assert sorted(fr.order) == list(range(G.n)) and fr.order[0] == root
    levels = [fr.level[v] for v in fr.order]
    assert levels == sorted(levels)
    for v in fr.order[1:]:
        p = fr.parent[v]
        assert G.has_edge(p, v) and fr.level[p] == fr.level[v] - 1 and fr.rank[p] < fr.rank[v]
        assert all(fr.parent[s] == p for s in fr.siblings(v))
    for u, v in G.edges:
        assert abs(fr.level[u] - fr.level[v]) <= 1


@given(graphs(max_n=9, connected=True))
def test_girth_and_tree_agree(G):
    assert math.isinf(girth(G)) == is_tree(G)
    if is_unicyclic(G):
        assert girth(G) == len(k_core(G, 2))
    if girth(G) % 2 == 1:
        assert not is_bipartite(G)


@given(graphs(max_n=8))
def test_search_order_is_a_permutation(G):
    assert sorted(search_order(G)) == list(range(G.n))
    assert is_connected(G) == (len(components(G)) <= 1)
