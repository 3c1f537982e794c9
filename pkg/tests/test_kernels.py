import pytest
from hypothesis import given
from hypothesis import strategies as st

from listdist import kernels
from listdist.generators import cycle, figure1, path
from listdist.oracles import naive_exists
from listdist.symmetry import automorphisms

from conftest import assignments, graphs

BACKENDS = sorted(kernels.backends())


def test_backend_selection():
    assert kernels.BACKEND in ("compiled", "python")
    assert kernels.impl is kernels.backends()[kernels.BACKEND]


def test_prepare_drops_identity():
    prep = kernels.prepare(cycle(5), automorphisms(cycle(5)))
    assert prep.perms.shape == (9, 5)
    assert sorted(prep.order) == list(range(5))


@pytest.mark.parametrize("backend", BACKENDS)
def test_search_small_cases(backend):
    mod = kernels.backends()[backend]
    prep = kernels.prepare(path(3), automorphisms(path(3)))
    status, f, _ = kernels.search(prep, [(0, 1)] * 3, backend=mod)
    assert status == 0 and f is None
    status, f, _ = kernels.search(prep, [(0, 1, 2)] * 3, backend=mod)
    assert status == 1 and f[0] != f[2] and f[1] not in (f[0], f[2])


@pytest.mark.parametrize("backend", BACKENDS)
def test_node_limit(backend):
    mod = kernels.backends()[backend]
    prep = kernels.prepare(cycle(8), automorphisms(cycle(8)))
    status, f, nodes = kernels.search(prep, [(0, 1)] * 8, node_limit=5, backend=mod)
    assert status == -1 and f is None


@pytest.mark.parametrize("backend", BACKENDS)
def test_find_bad_path3(backend):
    mod = kernels.backends()[backend]
    prep = kernels.prepare(path(3), automorphisms(path(3)))
    status, L, _ = kernels.find_bad(prep, 2, backend=mod)
    assert status == 1 and L is not None
    assert naive_exists(path(3), L) is None
    status, L, checked = kernels.find_bad(prep, 3, backend=mod)
    assert status == 0 and checked > 0


@given(graphs(max_n=6), st.integers(1, 3), st.data())
def test_backends_agree_on_search(G, k, data):
    L = data.draw(assignments(G.n, k, universe=k + 2))
    prep = kernels.prepare(G, automorphisms(G))
    expected = naive_exists(G, L)
    for mod in kernels.backends().values():
        status, f, _ = kernels.search(prep, L, backend=mod)
        assert (status == 1) == (expected is not None)
        if f is not None:
            assert all(c in row for c, row in zip(f, L))


@given(graphs(max_n=5), st.integers(1, 2))
def test_backends_agree_on_find_bad(G, k):
    prep = kernels.prepare(G, automorphisms(G))
    results = [kernels.find_bad(prep, k, backend=mod) for mod in kernels.backends().values()]
    assert len({(r[0], r[1], r[2]) for r in results}) == 1


def test_figure1_search():
    G = figure1()
    prep = kernels.prepare(G, automorphisms(G))
    status, f, _ = kernels.search(prep, [(0, 1)] * G.n)
    assert status == 1
