import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from listdist.graph import build_graph, is_connected
from listdist.symmetry import are_isomorphic

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


@st.composite
def graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    G = build_graph(n, [p for p, keep in zip(pairs, mask) if keep])
    if connected and not is_connected(G):
        # chain the components together
        edges = set(G.sorted_edges()) | {(i, i + 1) for i in range(n - 1)}
        G = build_graph(n, sorted(edges))
    return G


@st.composite
def assignments(draw, n, k, universe=None):
    u = universe or max(k, 2 * k)
    return [draw(st.lists(st.integers(0, u - 1), min_size=k, max_size=k, unique=True)) for _ in range(n)]


def connected_graphs_upto(nmax):
    """One representative per isomorphism class of connected graphs, n <= nmax."""
    out = []
    for n in range(1, nmax + 1):
        pairs = list(itertools.combinations(range(n), 2))
        reps = []
        for mask in range(1 << len(pairs)):
            G = build_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            if not is_connected(G):
                continue
            key = sorted(G.degree_sequence())
            if any(H.m == G.m and sorted(H.degree_sequence()) == key and are_isomorphic(G, H)
                   for H in reps):
                continue
            reps.append(G)
        out += reps
    return out


@pytest.fixture(scope="session")
def small_connected():
    return connected_graphs_upto(5)


_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance_report():
    """Collects one result line per acceptance criterion; printed in the summary."""
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
