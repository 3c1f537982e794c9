import pytest

from listdist.coloring import (identical_assignment, init_k, is_compliant, is_distinguishing,
                               is_identical, is_proper, min_list_size, truncate_assignment,
                               validate_assignment, verify)
from listdist.errors import ListError
from listdist.generators import cycle, path


def test_predicates_and_witnesses():
    G = path(3)
    assert is_proper(G, (0, 1, 0)) and not is_distinguishing(G, (0, 1, 0))
    assert is_distinguishing(G, (0, 1, 2)).ok
    assert is_proper(G, (0, 0, 1)).witness == (0, 1)
    assert is_compliant((0, 5, 1), [(0,), (1,), (1,)]).witness == 1
    assert is_distinguishing(G, (0, 1, 0)).witness == (2, 1, 0)


def test_verify_report_order():
    G = cycle(4)
    L = [(0, 1, 2)] * 4
    rep = verify(G, L, (0, 0, 1, 2))
    assert not rep.proper and rep.to_dict()["witness"] == {"kind": "edge", "value": [0, 1]}
    rep = verify(G, L, (0, 1, 0, 5))
    assert rep.proper and not rep.compliant and rep.to_dict()["witness"]["kind"] == "vertex"
    rep = verify(G, L, (0, 1, 0, 1))
    assert rep.to_dict()["witness"]["kind"] == "automorphism"
    assert verify(G, [(0, 1, 2, 3)] * 4, (0, 1, 2, 1)).ok is False
    assert not verify(G, [(0, 1, 2, 3)] * 4, (0, 1, 0, 2)).ok
    assert verify(G, [(0, 1, 2, 3)] * 4, (0, 1, 2, 3)).ok


def test_domain_mismatch():
    with pytest.raises(ValueError):
        is_proper(path(3), (0, 1))
    with pytest.raises(ValueError):
        verify(path(3), [(0,)] * 2, (0, 0, 0))


@pytest.mark.parametrize("L", [[()], [(1, 1)], [(-1,)]])
def test_validate_rejects(L):
    with pytest.raises(ListError):
        validate_assignment(L)


def test_list_helpers():
    assert init_k([5, 3, 9], 2) == (5, 3)
    with pytest.raises(ListError):
        init_k([1], 2)
    assert truncate_assignment([(1, 2, 3), (4, 5, 6)], 1) == ((1,), (4,))
    L = identical_assignment(3, [2, 1])
    assert is_identical(L) and is_identical([(1, 2), (2, 1)]) and not is_identical([(1,), (2,)])
    assert min_list_size([(1, 2), (3,)]) == 1
