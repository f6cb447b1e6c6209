"""Graph serialization: canonical JSON, edge-list text, and DOT export.

The JSON writer is canonical (sorted keys, fixed separators, trailing
newline) so that regenerating any committed fixture is bit-identical.
"""

from __future__ import annotations

import json
from pathlib import Path

from .graph import Graph, GraphError


def graph_to_dict(g: Graph) -> dict:
    out: dict = {
        "name": g.name,
        "vertices": list(g.vertices),
        "edges": [list(e) for e in g.edges()],
    }
    if g.labels:
        out["labels"] = {str(v): g.labels[v] for v in sorted(g.labels)}
    return out


def graph_to_json(g: Graph) -> str:
    return json.dumps(graph_to_dict(g), sort_keys=True, separators=(",", ":")) + "\n"


def graph_from_dict(obj: dict) -> Graph:
    try:
        vertices = obj["vertices"]
        edges = [tuple(e) for e in obj["edges"]]
    except (KeyError, TypeError) as exc:
        raise GraphError(f"malformed graph object: {exc}") from exc
    labels = None
    if "labels" in obj and obj["labels"]:
        labels = {int(k): _freeze_label(v) for k, v in obj["labels"].items()}
    return Graph(vertices, edges, name=obj.get("name", ""), labels=labels)


def _freeze_label(value):
    if isinstance(value, list):
        return tuple(_freeze_label(x) for x in value)
    return value


def graph_from_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise GraphError("graph JSON must be an object")
    return graph_from_dict(obj)


def parse_edge_list(text: str) -> Graph:
    """One ``u v`` pair per line; lines with a single token declare an
    isolated vertex; ``#`` starts a comment."""
    vertices: set[int] = set()
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError as exc:
            raise GraphError(f"line {lineno}: {exc}") from exc
        if len(nums) == 1:
            vertices.add(nums[0])
        elif len(nums) == 2:
            vertices.update(nums)
            edges.append((nums[0], nums[1]))
        else:
            raise GraphError(f"line {lineno}: expected 1 or 2 ids, got {len(nums)}")
    return Graph(vertices, edges)


def edge_list_text(g: Graph) -> str:
    lines = [f"# {g.name}"] if g.name else []
    touched = set()
    for u, v in g.edges():
        touched.add(u)
        touched.add(v)
        lines.append(f"{u} {v}")
    for v in g.vertices:
        if v not in touched:
            lines.append(str(v))
    return "\n".join(lines) + "\n"


def to_dot(g: Graph) -> str:
    name = g.name or "G"
    lines = [f'graph "{name}" {{']
    for v in g.vertices:
        if g.labels and v in g.labels:
            lines.append(f'  {v} [label="{g.labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_graph(path: str | Path) -> Graph:
    """Load a graph from a ``.json`` or edge-list file, by extension."""
    p = Path(path)
    text = p.read_text()
    if p.suffix == ".json":
        return graph_from_json(text)
    return parse_edge_list(text)


def save_graph(g: Graph, path: str | Path, fmt: str = "json") -> None:
    p = Path(path)
    if fmt == "json":
        p.write_text(graph_to_json(g))
    elif fmt == "dot":
        p.write_text(to_dot(g))
    elif fmt == "text":
        p.write_text(edge_list_text(g))
    else:
        raise ValueError(f"unknown format {fmt!r}")
