"""JSON and DOT serialization for graphs, colorings and list assignments."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Sequence

from .errors import GraphError, ListError
from .graph import Graph, build_graph


def graph_to_dict(G: Graph) -> dict[str, Any]:
    return {"n": G.n, "edges": [list(e) for e in G.sorted_edges()]}


def graph_from_dict(data: dict[str, Any]) -> Graph:
    try:
        n = int(data["n"])
        edges = [tuple(e) for e in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from exc
    for e in edges:
        if len(e) != 2:
            raise GraphError(f"edge {list(e)} is not a pair")
    return build_graph(n, edges)


def graph_to_json(G: Graph) -> str:
    return json.dumps(graph_to_dict(G))


def graph_to_dot(G: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f'  {v} [label="{v}"];' for v in range(G.n)]
    lines += [f"  {u} -- {v};" for u, v in G.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def assignment_from_json(data: Any, n: int | None = None) -> tuple[tuple[int, ...], ...]:
    if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
        raise ListError("list assignment JSON must be an array of arrays")
    L = tuple(tuple(int(c) for c in row) for row in data)
    if n is not None and len(L) != n:
        raise ListError(f"assignment has {len(L)} lists for {n} vertices")
    return L


def coloring_from_json(data: Any, n: int | None = None) -> tuple[int, ...]:
    """An array of colors, or an object with a "coloring" array (the output of
    ``listdist color``)."""
    if isinstance(data, dict) and "coloring" in data:
        data = data["coloring"]
    if not isinstance(data, list):
        raise ListError("coloring JSON must be an array or an object with a coloring array")
    f = tuple(int(c) for c in data)
    if n is not None and len(f) != n:
        raise ListError(f"coloring has {len(f)} entries for {n} vertices")
    return f


def assignment_to_json(L: Sequence[Sequence[int]]) -> list[list[int]]:
    return [list(row) for row in L]


def load_json(path: str | Path) -> Any:
    with open(path) as fh:
        return json.load(fh)


def load_graph(path: str | Path) -> Graph:
    return graph_from_dict(load_json(path))
