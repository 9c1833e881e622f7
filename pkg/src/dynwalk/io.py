"""JSON graph and walk files, plus a dot export for viewing.

Graph file::

    {
      "pattern": {"colors": ["B", "R", "G"], "edges": [["B", "R"], ["G", "R"]]},
      "graph": {
        "vertices": ["v1", "v2"],
        "edges": [{"id": "e1", "u": "v1", "v": "v2", "color": "B"}]
      }
    }

``"pattern": {"complete": 3}`` (or the string ``"complete"``, with the color
count taken from the largest edge color) selects the complete loopless pattern
on colors 1..c, which makes the file a c-edge-colored multigraph.

Walk file::

    {"steps": [{"from": "v4", "edges": ["e9"]}, ...], "end": "v4", "closed": true}
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import DynWalkError, GraphError, MalformedWalk
from .model import DynamicHWalk, HColoredMultigraph, PatternGraph, Step, build_graph, natural_key
from .pc import EdgeColoredMultigraph, edge_colored, normalize, to_h_colored


class ParseError(DynWalkError, ValueError):
    """A graph or walk file could not be read; the message names the line or field."""


@dataclass(frozen=True)
class LoadedGraph:
    graph: HColoredMultigraph
    ecm: EdgeColoredMultigraph | None = None


def _loads(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _field(obj, key: str, where: str, kind=None):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"{where}: missing field {key!r}")
    value = obj[key]
    if kind is not None and not isinstance(value, kind):
        raise ParseError(f"{where}.{key}: expected {getattr(kind, '__name__', kind)}")
    return value


def graph_from_dict(data) -> LoadedGraph:
    if not isinstance(data, dict):
        raise ParseError("top level: expected an object")
    gsec = _field(data, "graph", "top level", dict)
    verts = _field(gsec, "vertices", "graph", list)
    raw_edges = _field(gsec, "edges", "graph", list)
    edges = []
    for i, rec in enumerate(raw_edges):
        where = f"graph.edges[{i}]"
        if not isinstance(rec, dict):
            raise ParseError(f"{where}: expected an object")
        edges.append(tuple(_field(rec, k, where) for k in ("id", "u", "v", "color")))
    pat = _field(data, "pattern", "top level")
    try:
        if pat == "complete" or (isinstance(pat, dict) and "complete" in pat):
            for i, e in enumerate(edges):
                if not isinstance(e[3], int) and not str(e[3]).isdigit():
                    raise ParseError(f"graph.edges[{i}].color: complete patterns use integer colors")
            if isinstance(pat, dict):
                c = pat["complete"]
            else:
                c = max((int(e[3]) for e in edges), default=1)
            if not isinstance(c, int) or c < 1:
                raise ParseError("pattern.complete: expected a positive color count")
            ecm = normalize(edge_colored(verts, edges, c))
            return LoadedGraph(to_h_colored(ecm), ecm)
        if not isinstance(pat, dict):
            raise ParseError("pattern: expected an object or \"complete\"")
        colors = _field(pat, "colors", "pattern", list)
        pedges = _field(pat, "edges", "pattern", list)
        for i, p in enumerate(pedges):
            if not isinstance(p, list) or len(p) != 2:
                raise ParseError(f"pattern.edges[{i}]: expected a pair of colors")
        pattern = PatternGraph.from_edges(colors, [tuple(p) for p in pedges])
        return LoadedGraph(build_graph(verts, edges, pattern))
    except ParseError:
        raise
    except (GraphError, ValueError) as exc:
        raise ParseError(f"graph: {exc}") from None


def load_graph(path: str | Path) -> LoadedGraph:
    return graph_from_dict(_loads(Path(path).read_text(encoding="utf-8"), str(path)))


def pattern_to_dict(pattern: PatternGraph) -> dict:
    return {"colors": sorted(pattern.colors, key=natural_key), "edges": [list(p) for p in pattern.edge_list()]}


def graph_to_dict(graph: HColoredMultigraph) -> dict:
    return {
        "pattern": pattern_to_dict(graph.pattern),
        "graph": {
            "vertices": list(graph.vertices),
            "edges": [{"id": e.id, "u": e.u, "v": e.v, "color": e.color} for e in graph.edges],
        },
    }


def ecm_to_dict(ecm: EdgeColoredMultigraph) -> dict:
    return {
        "pattern": {"complete": ecm.c},
        "graph": {
            "vertices": list(ecm.vertices),
            "edges": [{"id": e, "u": u, "v": v, "color": col} for e, u, v, col in ecm.edges],
        },
    }


def walk_from_dict(data) -> DynamicHWalk:
    if not isinstance(data, dict):
        raise ParseError("walk: expected an object")
    steps_raw = _field(data, "steps", "walk", list)
    if not steps_raw:
        raise MalformedWalk("walk has no steps")
    steps = []
    for i, rec in enumerate(steps_raw):
        where = f"steps[{i}]"
        frm = _field(rec, "from", where)
        edges = _field(rec, "edges", where, list)
        if not edges:
            raise MalformedWalk(f"{where}.edges: a bundle needs at least one edge")
        steps.append(Step(str(frm), tuple(str(e) for e in edges)))
    closed = bool(data.get("closed", False))
    end = data.get("end")
    if end is None:
        if not closed:
            raise ParseError("walk: an open walk needs an \"end\" vertex")
        end = steps[0].vertex
    return DynamicHWalk(tuple(steps), str(end), closed)


def load_walk(path: str | Path) -> DynamicHWalk:
    text = Path(path).read_text(encoding="utf-8")
    if not text.strip():
        raise MalformedWalk(f"{path}: empty walk file")
    return walk_from_dict(_loads(text, str(path)))


def walk_to_dict(walk: DynamicHWalk) -> dict:
    return {
        "steps": [{"from": s.vertex, "edges": list(s.bundle)} for s in walk.steps],
        "end": walk.end,
        "closed": walk.closed,
    }


def dump_json(obj, path: str | Path | None = None) -> str:
    text = json.dumps(obj, indent=2) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def to_dot(graph: HColoredMultigraph, walk: DynamicHWalk | None = None) -> str:
    """Undirected dot text; edges on ``walk`` are drawn bold."""
    on_walk = set(walk.edge_ids) if walk else set()
    lines = ["graph G {"]
    for v in graph.vertices:
        lines.append(f'  "{v}";')
    for e in graph.edges:
        style = ", style=bold" if e.id in on_walk else ""
        lines.append(f'  "{e.u}" -- "{e.v}" [label="{e.id}:{e.color}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
