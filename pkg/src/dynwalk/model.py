"""Pattern graphs, H-colored multigraphs, bundle-structured walks and the walk verifier."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from .errors import (
    DanglingEndpoint,
    DuplicateEdgeId,
    LoopEdge,
    MalformedWalk,
    UnknownColor,
    UnknownEdge,
    UnknownVertex,
)

_DIGITS = re.compile(r"(\d+)")


def natural_key(ident: str) -> tuple:
    """Sort key that orders ``e2`` before ``e10``."""
    return tuple(int(tok) if tok.isdigit() else tok for tok in _DIGITS.split(str(ident)))


def sort_ids(ids: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(ids, key=natural_key))


@dataclass(frozen=True)
class PatternGraph:
    """The color-transition graph H. Loops are stored as one-element pairs."""

    colors: frozenset[str]
    adjacency: frozenset[frozenset[str]]
    _nbrs: Mapping[str, frozenset[str]] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        nbrs: dict[str, set[str]] = {c: set() for c in self.colors}
        for pair in self.adjacency:
            if not 1 <= len(pair) <= 2:
                raise ValueError(f"bad pattern edge {sorted(pair)}")
            for c in pair:
                if c not in self.colors:
                    raise UnknownColor(f"pattern edge uses unknown color {c!r}")
            a, b = tuple(pair) if len(pair) == 2 else (next(iter(pair)),) * 2
            nbrs[a].add(b)
            nbrs[b].add(a)
        object.__setattr__(self, "_nbrs", {c: frozenset(s) for c, s in nbrs.items()})

    @classmethod
    def from_edges(cls, colors: Iterable, edges: Iterable[tuple]) -> PatternGraph:
        colors = frozenset(str(c) for c in colors)
        adjacency = frozenset(frozenset((str(a), str(b))) for a, b in edges)
        return cls(colors, adjacency)

    @classmethod
    def complete(cls, colors: Iterable, loops: bool = False) -> PatternGraph:
        colors = [str(c) for c in colors]
        edges = list(combinations(colors, 2))
        if loops:
            edges += [(c, c) for c in colors]
        return cls.from_edges(colors, edges)

    @classmethod
    def complete_multipartite(cls, classes: Iterable[Iterable]) -> PatternGraph:
        """Loopless pattern whose colors are adjacent iff they lie in different classes."""
        classes = [[str(c) for c in cls_] for cls_ in classes]
        colors = [c for cls_ in classes for c in cls_]
        edges = [
            (a, b)
            for i, j in combinations(range(len(classes)), 2)
            for a in classes[i]
            for b in classes[j]
        ]
        return cls.from_edges(colors, edges)

    def neighborhood(self, color: str) -> frozenset[str]:
        try:
            return self._nbrs[color]
        except KeyError:
            raise UnknownColor(f"{color!r} is not a color of the pattern") from None

    def adjacent(self, a: str, b: str) -> bool:
        return b in self.neighborhood(a)

    def has_loop(self, color: str) -> bool:
        return color in self.neighborhood(color)

    def is_complete_loopless(self) -> bool:
        n = len(self.colors)
        return all(len(self._nbrs[c]) == n - 1 and not self.has_loop(c) for c in self.colors)

    def edge_list(self) -> list[tuple[str, str]]:
        out = []
        for pair in self.adjacency:
            a, b = sort_ids(pair) if len(pair) == 2 else (next(iter(pair)),) * 2
            out.append((a, b))
        return sorted(out, key=lambda p: (natural_key(p[0]), natural_key(p[1])))


def pattern_neighborhood(pattern: PatternGraph, color: str) -> frozenset[str]:
    return pattern.neighborhood(color)


@dataclass(frozen=True)
class Edge:
    id: str
    u: str
    v: str
    color: str

    @property
    def ends(self) -> frozenset[str]:
        return frozenset((self.u, self.v))

    def other(self, x: str) -> str:
        return self.v if x == self.u else self.u


def _pair(u: str, v: str) -> frozenset[str]:
    return frozenset((u, v))


@dataclass(frozen=True)
class HColoredMultigraph:
    """Loopless multigraph G with an H-coloring. Build it with :func:`build_graph`."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    pattern: PatternGraph
    _by_id: Mapping[str, Edge] = field(init=False, repr=False, compare=False)
    _bundles: Mapping[frozenset, tuple[str, ...]] = field(init=False, repr=False, compare=False)
    _incident: Mapping[str, tuple[str, ...]] = field(init=False, repr=False, compare=False)
    _nbrs: Mapping[str, tuple[str, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        vset = set(self.vertices)
        by_id: dict[str, Edge] = {}
        bundles: dict[frozenset, list[str]] = {}
        incident: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            if e.id in by_id:
                raise DuplicateEdgeId(f"edge id {e.id!r} used twice")
            if e.u not in vset or e.v not in vset:
                raise DanglingEndpoint(f"edge {e.id!r} has an endpoint outside the vertex set")
            if e.u == e.v:
                raise LoopEdge(f"edge {e.id!r} is a loop at {e.u!r}")
            if e.color not in self.pattern.colors:
                raise UnknownColor(f"edge {e.id!r} has color {e.color!r} not in the pattern")
            by_id[e.id] = e
            bundles.setdefault(e.ends, []).append(e.id)
            incident[e.u].append(e.id)
            incident[e.v].append(e.id)
        nbrs = {v: set() for v in self.vertices}
        for key in bundles:
            a, b = tuple(key)
            nbrs[a].add(b)
            nbrs[b].add(a)
        object.__setattr__(self, "_by_id", by_id)
        object.__setattr__(self, "_bundles", {k: sort_ids(v) for k, v in bundles.items()})
        object.__setattr__(self, "_incident", {k: sort_ids(v) for k, v in incident.items()})
        object.__setattr__(self, "_nbrs", {k: sort_ids(v) for k, v in nbrs.items()})

    @property
    def n(self) -> int:
        return len(self.vertices)

    def has_vertex(self, v: str) -> bool:
        return v in self._incident

    def _check_vertex(self, v: str) -> None:
        if v not in self._incident:
            raise UnknownVertex(f"unknown vertex {v!r}")

    def edge(self, eid: str) -> Edge:
        try:
            return self._by_id[eid]
        except KeyError:
            raise UnknownEdge(f"unknown edge {eid!r}") from None

    def color(self, eid: str) -> str:
        return self.edge(eid).color

    def bundle(self, u: str, v: str) -> tuple[str, ...]:
        """E_uv: ids of all edges joining ``u`` and ``v``, in id order."""
        self._check_vertex(u)
        self._check_vertex(v)
        return self._bundles.get(_pair(u, v), ())

    def bundles(self) -> dict[tuple[str, str], tuple[str, ...]]:
        out = {}
        for key, ids in self._bundles.items():
            u, v = sort_ids(key)
            out[(u, v)] = ids
        return dict(sorted(out.items(), key=lambda kv: (natural_key(kv[0][0]), natural_key(kv[0][1]))))

    def incident(self, u: str) -> tuple[str, ...]:
        self._check_vertex(u)
        return self._incident[u]

    def neighbors(self, u: str) -> tuple[str, ...]:
        self._check_vertex(u)
        return self._nbrs[u]

    def colors_adjacent(self, e: str, f: str) -> bool:
        """Whether the colors of edges ``e`` and ``f`` are adjacent in H."""
        return self.pattern.adjacent(self.color(e), self.color(f))

    def max_bundle_width(self) -> int:
        return max((len(ids) for ids in self._bundles.values()), default=0)


def build_graph(vertices: Iterable, edges: Iterable, pattern: PatternGraph) -> HColoredMultigraph:
    """Validate and index an H-colored multigraph.

    ``edges`` holds ``(id, u, v, color)`` tuples or :class:`Edge` records. Ids,
    vertices and colors are coerced to ``str``.
    """
    recs = []
    for rec in edges:
        if isinstance(rec, Edge):
            recs.append(rec)
        else:
            eid, u, v, color = rec
            recs.append(Edge(str(eid), str(u), str(v), str(color)))
    verts = [str(v) for v in vertices]
    if len(set(verts)) != len(verts):
        raise ValueError("duplicate vertex id")
    return HColoredMultigraph(sort_ids(verts), tuple(sorted(recs, key=lambda e: natural_key(e.id))), pattern)


@dataclass(frozen=True)
class Step:
    vertex: str
    bundle: tuple[str, ...]


@dataclass(frozen=True)
class DynamicHWalk:
    """Walk v_0, bundle_0, v_1, ..., bundle_{n-1}, v_n.

    A closed walk keeps ``end == steps[0].vertex`` and the ``closed`` flag
    instead of repeating the first step.
    """

    steps: tuple[Step, ...]
    end: str
    closed: bool = False

    @classmethod
    def of(cls, pairs: Iterable[tuple[str, Iterable[str]]], end: str, closed: bool = False) -> DynamicHWalk:
        return cls(tuple(Step(v, tuple(b)) for v, b in pairs), end, closed)

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(s.vertex for s in self.steps) + (self.end,)

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def changes(self) -> int:
        return sum(len(s.bundle) - 1 for s in self.steps)

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e for s in self.steps for e in s.bundle)

    def reversed(self) -> DynamicHWalk:
        verts = self.vertices
        steps = []
        for i in range(len(self.steps) - 1, -1, -1):
            steps.append(Step(verts[i + 1], tuple(reversed(self.steps[i].bundle))))
        return DynamicHWalk(tuple(steps), verts[0], self.closed)

    def __str__(self) -> str:
        parts = []
        for s in self.steps:
            parts.append(s.vertex)
            parts.append("[" + ",".join(s.bundle) + "]")
        parts.append(self.end)
        return "(" + ",".join(parts) + ")" + (" closed" if self.closed else "")


@dataclass(frozen=True)
class WalkClassification:
    is_dynamic_h_walk: bool
    is_h_walk: bool
    is_trail: bool
    is_path: bool
    is_cycle: bool
    closed: bool
    length: int
    changes: int
    vertices_visited: int
    first_violation: str | None = None

    @property
    def kind(self) -> str:
        if not self.is_dynamic_h_walk:
            return "not a dynamic H-walk"
        prefix = "H-" if self.is_h_walk else "dynamic H-"
        if self.is_cycle:
            return prefix + "cycle"
        if self.is_path:
            return prefix + "path"
        if self.closed:
            return "closed " + prefix + ("trail" if self.is_trail else "walk")
        return prefix + ("trail" if self.is_trail else "walk")

    def summary(self) -> str:
        text = f"{self.kind}, length {self.length}, changes {self.changes}"
        if self.first_violation:
            text += f" ({self.first_violation})"
        return text


def verify_walk(graph: HColoredMultigraph, walk: DynamicHWalk) -> WalkClassification:
    """Classify ``walk`` against ``graph``.

    Lane changes inside a bundle are unconstrained; only the last edge of a
    bundle and the first edge of the next one must have adjacent colors.
    """
    if not walk.steps:
        raise MalformedWalk("walk has no steps")
    for i, s in enumerate(walk.steps):
        if not s.bundle:
            raise MalformedWalk(f"step {i} has an empty bundle")
        graph._check_vertex(s.vertex)
        for e in s.bundle:
            graph.edge(e)
    graph._check_vertex(walk.end)

    verts = walk.vertices
    n = len(walk.steps)
    violation = None
    for i, s in enumerate(walk.steps):
        for e in s.bundle:
            if graph.edge(e).ends != _pair(verts[i], verts[i + 1]):
                violation = f"step {i}: edge {e} does not join {verts[i]} and {verts[i + 1]}"
                break
        if violation:
            break
    if violation is None:
        for i in range(n - 1):
            a, b = walk.steps[i].bundle[-1], walk.steps[i + 1].bundle[0]
            if not graph.colors_adjacent(a, b):
                violation = (
                    f"step boundary {i}/{i + 1}: c({a})={graph.color(a)} and "
                    f"c({b})={graph.color(b)} are not adjacent in H"
                )
                break
    if violation is None and walk.closed:
        if verts[0] != verts[-1]:
            violation = f"closed walk ends at {verts[-1]}, not at {verts[0]}"
        else:
            a, b = walk.steps[-1].bundle[-1], walk.steps[0].bundle[0]
            if not graph.colors_adjacent(a, b):
                violation = (
                    f"closing transition {n - 1}/0: c({a})={graph.color(a)} and "
                    f"c({b})={graph.color(b)} are not adjacent in H"
                )

    ok = violation is None
    ids = walk.edge_ids
    no_repeat_edge = len(set(ids)) == len(ids)
    inner = verts[:-1] if walk.closed else verts
    distinct_vertices = len(set(inner)) == len(inner)
    is_trail = ok and no_repeat_edge
    return WalkClassification(
        is_dynamic_h_walk=ok,
        is_h_walk=ok and walk.changes == 0,
        is_trail=is_trail,
        is_path=is_trail and not walk.closed and distinct_vertices,
        is_cycle=is_trail and walk.closed and distinct_vertices and n >= 2,
        closed=walk.closed,
        length=n,
        changes=walk.changes,
        vertices_visited=len(set(verts)),
        first_violation=violation,
    )
