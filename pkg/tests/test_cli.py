import json

import pytest

from listdist import generators, io
from listdist.cli import main
from listdist.coloring import identical_assignment


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return p


@pytest.fixture
def fig1(tmp_path):
    return write(tmp_path, "fig1.json", io.graph_to_dict(generators.figure1()))


def test_gen_json_and_dot(capsys):
    code, out, _ = run(capsys, "gen", "book", 2)
    assert code == 0 and json.loads(out) == io.graph_to_dict(generators.book(2))
    code, out, _ = run(capsys, "gen", "cycle", 4, "--format", "dot")
    assert code == 0 and out.startswith("graph G {")


def test_gen_usage_errors(capsys):
    code, _, err = run(capsys, "gen", "cycle")
    assert code == 2 and json.loads(err)["error"] == "usage"
    code, _, err = run(capsys, "gen", "cycle", 2)
    assert code == 1 and json.loads(err)["error"] == "GraphError"
    code, _, _ = run(capsys, "gen", "nonsense")
    assert code == 2


@pytest.mark.parametrize("name,value", [("chi", 2), ("chi-d", 2), ("d", 1), ("d-l", 1),
                                        ("chi-l", 3), ("chi-dl", 3), ("col", 3),
                                        ("aut-order", 1), ("girth", 4)])
def test_invariants_of_figure1(capsys, fig1, name, value):
    code, out, _ = run(capsys, "invariant", name, "--graph", fig1)
    assert code == 0 and json.loads(out)["value"] == value


def test_girth_of_tree_is_null(capsys, tmp_path):
    g = write(tmp_path, "p.json", io.graph_to_dict(generators.path(4)))
    code, out, _ = run(capsys, "invariant", "girth", "--graph", g)
    assert json.loads(out)["value"] is None


def test_badlist(capsys, fig1):
    code, out, _ = run(capsys, "badlist", "--graph", fig1, "--k", 2)
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "found" and len(doc["assignment"]) == 13
    code, out, _ = run(capsys, "badlist", "--graph", fig1, "--k", 3)
    assert json.loads(out)["status"] == "none found"


def test_color_and_verify_round_trip(capsys, tmp_path, fig1):
    L = [list(range(v % 3, v % 3 + 9)) for v in range(13)]
    lists = write(tmp_path, "L.json", L)
    code, out, _ = run(capsys, "color", "brooks", "--graph", fig1, "--lists", lists)
    doc = json.loads(out)
    assert code == 0 and doc["verified"] and doc["method"] == "brooks"
    col = write(tmp_path, "f.json", doc["coloring"])
    code, out, _ = run(capsys, "verify", "--graph", fig1, "--lists", lists, "--coloring", col)
    assert code == 0 and json.loads(out)["proper"]


def test_verify_failure(capsys, tmp_path):
    g = write(tmp_path, "c4.json", io.graph_to_dict(generators.cycle(4)))
    lists = write(tmp_path, "L.json", [[0, 1, 2]] * 4)
    col = write(tmp_path, "f.json", [0, 1, 0, 1])
    code, out, err = run(capsys, "verify", "--graph", g, "--lists", lists, "--coloring", col)
    assert code == 1
    assert json.loads(out)["witness"]["kind"] == "automorphism"
    assert json.loads(err)["error"] == "verification"


@pytest.mark.parametrize("family,n", [("book", 3), ("friendship", 3)])
def test_family_colorings(capsys, tmp_path, family, n):
    G = generators.gen_family(family, n)
    # scramble vertex ids so the CLI has to find the isomorphism
    perm = list(reversed(range(G.n)))
    from listdist.graph import relabel
    H = relabel(G, perm)
    g = write(tmp_path, "g.json", io.graph_to_dict(H))
    lists = write(tmp_path, "L.json", [list(r) for r in identical_assignment(H.n, range(4))])
    code, out, _ = run(capsys, "color", family, "--graph", g, "--lists", lists)
    assert code == 0 and json.loads(out)["verified"]


def test_join(capsys, tmp_path):
    a = write(tmp_path, "a.json", io.graph_to_dict(generators.cprime(2)))
    b = write(tmp_path, "b.json", io.graph_to_dict(generators.cprime(3)))
    lists = write(tmp_path, "L.json", [list(range(6))] * 70)
    code, out, _ = run(capsys, "color", "join", "--part", a, "--part", b, "--lists", lists)
    assert code == 0 and json.loads(out)["colors_used"] <= 6
    code, _, err = run(capsys, "color", "join", "--part", a, "--lists", lists)
    assert code == 2


def test_partition_needs_r(capsys, tmp_path, fig1):
    lists = write(tmp_path, "L.json", [list(range(9))] * 13)
    code, _, err = run(capsys, "color", "partition", "--graph", fig1, "--lists", lists)
    assert code == 2 and "--r" in json.loads(err)["message"]


def test_precondition_failure_exit_code(capsys, tmp_path):
    g = write(tmp_path, "k33.json", io.graph_to_dict(generators.complete_bipartite(3, 3)))
    lists = write(tmp_path, "L.json", [list(range(5))] * 6)
    code, _, err = run(capsys, "color", "brooks", "--graph", g, "--lists", lists)
    assert code == 1 and json.loads(err)["error"] == "PreconditionError"


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "invariant", "chi", "--graph", tmp_path / "nope.json")
    assert code == 2 and json.loads(err)["error"] == "usage"


def test_tables(capsys):
    code, out, _ = run(capsys, "table", "1", "--max-n", 6)
    doc = json.loads(out)
    assert code == 0 and doc["all_agree"] and len(doc["rows"]) == 5 + 4
    code, out, _ = run(capsys, "table", "2", "--max-n", 5)
    doc = json.loads(out)
    assert doc["all_agree"]
    assert {r["status"] for r in doc["rows"]} == {"AGREE", "FORMULA"}
