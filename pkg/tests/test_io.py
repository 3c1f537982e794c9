import json

import pytest
from hypothesis import given

from listdist.errors import GraphError, ListError
from listdist.generators import book
from listdist.io import (assignment_from_json, assignment_to_json, coloring_from_json,
                         graph_from_dict, graph_to_dot, graph_to_json, load_graph)

from conftest import graphs


@given(graphs(max_n=8))
def test_graph_json_round_trip(G):
    assert graph_from_dict(json.loads(graph_to_json(G))) == G


def test_load_graph(tmp_path):
    p = tmp_path / "g.json"
    p.write_text(graph_to_json(book(2)))
    assert load_graph(p) == book(2)


@pytest.mark.parametrize("data", [{"edges": []}, {"n": 3}, {"n": 3, "edges": [[0, 1, 2]]},
                                  {"n": 2, "edges": [[0, 5]]}])
def test_malformed_graph_json(data):
    with pytest.raises(GraphError):
        graph_from_dict(data)


def test_dot_output():
    dot = graph_to_dot(book(2), name="B")
    assert dot.startswith("graph B {") and "  0 -- 1;" in dot and dot.count("--") == 7


def test_assignment_and_coloring_json():
    L = assignment_from_json([[1, 2], [3, 4]], n=2)
    assert assignment_to_json(L) == [[1, 2], [3, 4]]
    assert coloring_from_json([0, 1], n=2) == (0, 1)
    assert coloring_from_json({"method": "cycle", "coloring": [2, 0]}, n=2) == (2, 0)
    with pytest.raises(ListError):
        assignment_from_json([1, 2])
    with pytest.raises(ListError):
        assignment_from_json([[1]], n=2)
    with pytest.raises(ListError):
        coloring_from_json({"a": 1})
