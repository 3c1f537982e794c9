import pytest

from listdist.errors import GraphError
from listdist.generators import (FAMILIES, FamilySpec, book, cprime, cycle_with_pendants, figure1,
                                 friendship, gen_family, pendant_length)
from listdist.graph import girth, is_bipartite, is_connected, is_unicyclic


@pytest.mark.parametrize("family,params,n,m", [
    ("path", (4,), 4, 3), ("cycle", (6,), 6, 6), ("complete", (4,), 4, 6),
    ("complete_bipartite", (2, 3), 5, 6), ("star", (3,), 4, 3), ("book", (3,), 8, 10),
    ("friendship", (2,), 5, 6), ("cprime", (2,), 28, 28), ("cprime", (3,), 42, 42),
    ("figure1", (), 13, 15),
])
def test_family_sizes(family, params, n, m):
    G = gen_family(family, *params)
    assert (G.n, G.m) == (n, m) and is_connected(G)


def test_family_spec_validation():
    assert str(FamilySpec("book", (3,))) == "book(3)"
    with pytest.raises(GraphError):
        FamilySpec("nope", ())
    with pytest.raises(GraphError):
        gen_family("cycle", 2)
    assert "figure1" in FAMILIES


def test_book_and_friendship_numbering():
    B = book(3)
    assert B.has_edge(0, 1) and all(B.has_edge(0, 2 * i) and B.has_edge(1, 2 * i + 1)
                                    and B.has_edge(2 * i, 2 * i + 1) for i in (1, 2, 3))
    F = friendship(3)
    assert F.degree(0) == 6 and all(F.has_edge(2 * i - 1, 2 * i) for i in (1, 2, 3))


def test_cprime_pendants():
    assert [pendant_length(k) for k in range(1, 9)] == [1, 2, 3, 4, 1, 2, 3, 4]
    G = cprime(2)
    assert is_unicyclic(G) and girth(G) == 8 and G.max_degree == 3


def test_figure1_shape():
    G = figure1()
    assert is_bipartite(G) and G.degree(5) == 5


def test_cycle_with_pendants():
    G = cycle_with_pendants(7, [(0, 2), (3, 1)])
    assert (G.n, G.m) == (10, 10) and G.has_edge(0, 7) and G.has_edge(7, 8) and G.has_edge(3, 9)
