"""Graph file formats: edge list text, JSON, and DOT export.

Edge list: first line ``V E``, then ``E`` lines ``u v`` (a loop is ``v v``).
JSON: ``{"vertices": V, "edges": [[u, v], ...]}``; pants graphs add
``"genus"`` and ``"boundary"``.  Readers sniff the format from the first
non-blank character (``{`` means JSON).
"""

from __future__ import annotations

import json

from .multigraph import GraphError, MultiGraph


def to_edge_list(g: MultiGraph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> MultiGraph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise GraphError("empty edge list")
    try:
        header = [int(x) for x in rows[0]]
        body = [[int(x) for x in r] for r in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"non-integer token in edge list: {exc}") from None
    if len(header) != 2:
        raise GraphError("edge list header must be 'V E'")
    n, m = header
    if len(body) != m:
        raise GraphError(f"header declares {m} edges but {len(body)} follow")
    for r in body:
        if len(r) != 2:
            raise GraphError(f"edge line {r} must have two endpoints")
    return MultiGraph(n, body)


def to_json_obj(g: MultiGraph) -> dict:
    return {"vertices": g.vertex_count, "edges": [list(e) for e in g.edges]}


def from_json_obj(obj: dict) -> MultiGraph:
    try:
        return MultiGraph(int(obj["vertices"]), [tuple(e) for e in obj["edges"]])
    except (KeyError, TypeError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from None


def to_json(g: MultiGraph) -> str:
    return json.dumps(to_json_obj(g))


def read_graph_text(text: str) -> tuple[MultiGraph, dict]:
    """Parse either format.  The second value holds any extra JSON fields."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise GraphError(f"invalid JSON: {exc}") from None
        if "graph" in obj and isinstance(obj["graph"], dict):
            extra = {k: v for k, v in obj.items() if k != "graph"}
            return from_json_obj(obj["graph"]), extra
        extra = {k: v for k, v in obj.items() if k not in ("vertices", "edges")}
        return from_json_obj(obj), extra
    return from_edge_list(text), {}


def to_dot(g: MultiGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.vertex_count))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
