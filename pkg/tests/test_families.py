import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from listdist.coloring import identical_assignment, verify
from listdist.errors import ListError, PreconditionError
from listdist.families import (book_chi_d, book_chi_dl, book_coloring, book_d, ceil_sqrt,
                               classify_book, friendship_chi_d, friendship_coloring, friendship_d,
                               table2_rows)
from listdist.generators import book, friendship
from listdist.oracles import chi_d, distinguishing_number, sample_assignment


def test_ceil_sqrt():
    assert [ceil_sqrt(n) for n in (1, 2, 4, 5, 9, 10, 10**12, 10**12 + 1)] == \
        [1, 2, 2, 3, 3, 4, 10**6, 10**6 + 1]


@pytest.mark.parametrize("n,regime", [(2, "B"), (3, "B"), (4, "A"), (5, "B"), (7, "B"), (8, "A"),
                                      (9, "A"), (10, "B"), (13, "B"), (14, "A")])
def test_book_regimes(n, regime):
    assert classify_book(n).regime == regime


@given(st.integers(2, 10**6))
def test_regimes_partition_the_integers(n):
    assert classify_book(n).regime in ("A", "B")


@pytest.mark.parametrize("n", range(2, 6))
def test_book_formulas_match_search(n):
    G = book(n)
    assert distinguishing_number(G) == book_d(n)
    assert chi_d(G) == book_chi_d(n)


@pytest.mark.parametrize("n", range(2, 6))
def test_friendship_formulas_match_search(n):
    G = friendship(n)
    assert distinguishing_number(G) == friendship_d(n)
    assert chi_d(G) == friendship_chi_d(n)


def test_friendship_d_values():
    assert [friendship_d(n) for n in (2, 3, 4, 6, 7, 10, 11)] == [3, 3, 4, 4, 5, 5, 6]


@pytest.mark.parametrize("n", [2, 3, 4, 5, 7, 9, 12])
def test_book_coloring_random_lists(n):
    rng = random.Random(n)
    G = book(n)
    k = book_chi_dl(n)
    for _ in range(20):
        L = sample_assignment(G.n, k, rng, universe=k + 3)
        assert verify(G, L, book_coloring(n, L)).ok
    assert verify(G, identical_assignment(G.n, range(k)),
                  book_coloring(n, identical_assignment(G.n, range(k)))).ok


@pytest.mark.parametrize("n", [2, 3, 4, 6, 7, 10])
def test_friendship_coloring_random_lists(n):
    rng = random.Random(n)
    G = friendship(n)
    k = friendship_d(n) + 1
    for _ in range(20):
        L = sample_assignment(G.n, k, rng, universe=k + 3)
        trace = []
        assert verify(G, L, friendship_coloring(n, L, trace)).ok
        assert trace and trace[0]["step"] == "hub"


def test_short_lists_rejected():
    with pytest.raises(ListError):
        book_coloring(3, identical_assignment(8, range(2)))
    with pytest.raises(PreconditionError):
        friendship_coloring(1, identical_assignment(3, range(5)))


def test_table2_rows():
    rows = table2_rows(4)
    assert len(rows) == 6
    assert rows[0] == {"graph": "book", "n": 2, "regime": "B", "chi_d": 3, "chi_dl": 3}
    assert rows[-1]["chi_dl"] == friendship_d(4) + 1
