import itertools

from hypothesis import given
from hypothesis import strategies as st

from listdist.matching import max_matching, perfect_matching


def brute_size(options):
    best = 0
    for pick in itertools.product(*[list(o) + [None] for o in options]):
        used = [r for r in pick if r is not None]
        if len(used) == len(set(used)):
            best = max(best, len(used))
    return best


@given(st.lists(st.lists(st.integers(0, 5), max_size=3, unique=True), max_size=6))
def test_matching_is_maximum(options):
    chosen = max_matching(options)
    used = [r for r in chosen if r is not None]
    assert len(used) == len(set(used))
    assert all(r is None or r in opts for r, opts in zip(chosen, options))
    assert len(used) == brute_size(options)
    assert (perfect_matching(options) is not None) == (len(used) == len(options))


def test_hall_violation():
    assert perfect_matching([[1], [1], [1, 2]]) is None
    assert perfect_matching([["a", "b"], ["a"]]) == ["b", "a"]
