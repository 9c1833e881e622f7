"""Auxiliary graphs G_u, multipartite certificates, dynamic edge sets and hypothesis reports."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

from .errors import NotMultipartite, SameVertex
from .model import HColoredMultigraph, natural_key, sort_ids


@dataclass(frozen=True)
class AuxiliaryGraph:
    center: str
    nodes: tuple[str, ...]
    adjacency: frozenset[frozenset[str]]

    def adjacent(self, a: str, b: str) -> bool:
        return frozenset((a, b)) in self.adjacency


def auxiliary_graph(graph: HColoredMultigraph, u: str) -> AuxiliaryGraph:
    nodes = graph.incident(u)
    adj = frozenset(
        frozenset((a, b)) for a, b in combinations(nodes, 2) if graph.colors_adjacent(a, b)
    )
    return AuxiliaryGraph(u, nodes, adj)


@dataclass(frozen=True)
class MultipartiteCertificate:
    """Either the parts of a complete multipartite graph or a violation triple.

    The triple ``(a, b, c)`` has a, b non-adjacent, b, c non-adjacent and a, c
    adjacent, so non-adjacency is not transitive.
    """

    parts: tuple[tuple[str, ...], ...] | None = None
    witness: tuple[str, str, str] | None = None

    @property
    def ok(self) -> bool:
        return self.parts is not None

    @property
    def k(self) -> int | None:
        return None if self.parts is None else len(self.parts)

    def part_of(self, node: str) -> int:
        for i, part in enumerate(self.parts or ()):
            if node in part:
                return i
        raise KeyError(node)


def multipartite_certificate(aux: AuxiliaryGraph) -> MultipartiteCertificate:
    parts: list[list[str]] = []
    for x in aux.nodes:
        home = [p for p in parts if not aux.adjacent(x, p[0])]
        if not home:
            parts.append([x])
            continue
        if len(home) > 1:
            # x is non-adjacent to two representatives that are adjacent to each other
            return MultipartiteCertificate(witness=(home[0][0], x, home[1][0]))
        part = home[0]
        for y in part[1:]:
            if aux.adjacent(x, y):
                return MultipartiteCertificate(witness=(x, part[0], y))
        part.append(x)
    for p, q in combinations(parts, 2):
        if any(not aux.adjacent(a, b) for a in p for b in q):
            return MultipartiteCertificate(witness=_find_triple(aux))
    ordered = sorted((sort_ids(p) for p in parts), key=lambda p: natural_key(p[0]))
    return MultipartiteCertificate(parts=tuple(ordered))


def _find_triple(aux: AuxiliaryGraph) -> tuple[str, str, str]:
    for b in aux.nodes:
        away = [x for x in aux.nodes if x != b and not aux.adjacent(x, b)]
        for a, c in combinations(away, 2):
            if aux.adjacent(a, c):
                return (a, b, c)
    raise AssertionError("non-adjacency is transitive")


@dataclass(frozen=True)
class DynamicEdgeCheck:
    dynamic: bool
    witness: tuple[str, str] | None = None

    def __bool__(self) -> bool:
        return self.dynamic


def _incomparable(a: frozenset, b: frozenset) -> bool:
    return a != b and not a <= b and not b <= a


def is_dynamic_edge_set(graph: HColoredMultigraph, u: str, v: str) -> DynamicEdgeCheck:
    """E_uv is dynamic iff two of its edges have incomparable color neighborhoods in H."""
    if u == v:
        raise SameVertex(f"{u!r} given twice")
    ids = graph.bundle(u, v)
    nb = graph.pattern.neighborhood
    for e, f in combinations(ids, 2):
        if _incomparable(nb(graph.color(e)), nb(graph.color(f))):
            return DynamicEdgeCheck(True, (e, f))
    return DynamicEdgeCheck(False)


def dynamic_degree(graph: HColoredMultigraph, u: str) -> int:
    return sum(1 for v in graph.neighbors(u) if is_dynamic_edge_set(graph, u, v))


@dataclass(frozen=True)
class DynamicGraph:
    nodes: tuple[str, ...]
    adjacency: Mapping[str, tuple[str, ...]]

    def neighbors(self, u: str) -> tuple[str, ...]:
        return self.adjacency[u]

    def degree(self, u: str) -> int:
        return len(self.adjacency[u])

    def has_edge(self, u: str, v: str) -> bool:
        return v in self.adjacency.get(u, ())

    def edges(self) -> list[tuple[str, str]]:
        out = []
        for u in self.nodes:
            for v in self.adjacency[u]:
                if natural_key(u) < natural_key(v):
                    out.append((u, v))
        return out

    def is_connected(self) -> bool:
        if not self.nodes:
            return True
        seen = {self.nodes[0]}
        todo = deque(seen)
        while todo:
            x = todo.popleft()
            for y in self.adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return len(seen) == len(self.nodes)


def dynamic_graph(graph: HColoredMultigraph) -> DynamicGraph:
    adj: dict[str, list[str]] = {v: [] for v in graph.vertices}
    for (u, v) in graph.bundles():
        if is_dynamic_edge_set(graph, u, v):
            adj[u].append(v)
            adj[v].append(u)
    return DynamicGraph(graph.vertices, {k: sort_ids(vs) for k, vs in adj.items()})


def observation1_check(graph: HColoredMultigraph, u: str, v: str) -> bool:
    """Whether two edges of E_uv lie in different parts of G_u."""
    if u == v:
        raise SameVertex(f"{u!r} given twice")
    cert = multipartite_certificate(auxiliary_graph(graph, u))
    if not cert.ok:
        raise NotMultipartite(f"G_{u} is not complete multipartite", cert.witness)
    ids = graph.bundle(u, v)
    return len({cert.part_of(e) for e in ids}) >= 2


def part_distinct_pair(graph: HColoredMultigraph, u: str, v: str) -> tuple[str, str] | None:
    """Least pair of edges of E_uv whose colors are adjacent in H.

    In a complete multipartite G_u (or G_v) this is the least pair lying in
    different parts; adjacency is a color property, so both ends agree.
    """
    for e, f in combinations(graph.bundle(u, v), 2):
        if graph.colors_adjacent(e, f):
            return (e, f)
    return None


@dataclass(frozen=True)
class VertexReport:
    vertex: str
    multipartite: bool
    k: int | None
    witness: tuple[str, str, str] | None
    dynamic_degree: int


# Names of the constructions whose premises the report decides.
LONG_CYCLE = "long-cycle"
PATH_OR_CYCLE = "path-or-cycle"
EULER = "euler"
ORE_DYNAMIC = "ham-dyn"
ORE_H = "ham-h"
DIRAC_DYNAMIC = "dirac-dyn"
DIRAC_H = "dirac-h"
HAM_PATH_PREMISE = "ham-path (premise only)"
HAM_CONNECTED_PREMISE = "ham-connected (premise only)"


@dataclass(frozen=True)
class HypothesisReport:
    n: int
    vertices: tuple[VertexReport, ...]
    dynamic_edges: tuple[tuple[str, str], ...]
    all_multipartite: bool
    all_k_at_least_2: bool
    some_k_at_least_3: bool
    all_k_at_least_3: bool
    min_dynamic_degree: int | None
    dym_connected: bool
    all_dynamic_degrees_even: bool
    ore_min_sum: int | None
    ore_min_pair: tuple[str, str] | None
    parts_consistent: bool
    parts_counterexample: tuple[str, str] | None
    applicable: tuple[str, ...]
    premises_only: tuple[str, ...] = ()
    _by_vertex: Mapping[str, VertexReport] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_by_vertex", {r.vertex: r for r in self.vertices})

    def vertex(self, v: str) -> VertexReport:
        return self._by_vertex[v]

    def delta(self, v: str) -> int:
        return self._by_vertex[v].dynamic_degree

    @property
    def base_premise(self) -> bool:
        """Every G_u complete multipartite with k_u >= 2 and dynamic bundles liftable."""
        return self.n > 0 and self.all_multipartite and self.all_k_at_least_2 and self.parts_consistent

    @property
    def max_cycle_d(self) -> int | None:
        """Largest d for which the long-cycle construction applies."""
        if LONG_CYCLE in self.applicable:
            return self.min_dynamic_degree
        return None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "vertices": [
                {
                    "vertex": r.vertex,
                    "multipartite": r.multipartite,
                    "k": r.k,
                    "witness": list(r.witness) if r.witness else None,
                    "dynamic_degree": r.dynamic_degree,
                }
                for r in self.vertices
            ],
            "dynamic_edges": [list(p) for p in self.dynamic_edges],
            "all_multipartite": self.all_multipartite,
            "all_k_at_least_2": self.all_k_at_least_2,
            "some_k_at_least_3": self.some_k_at_least_3,
            "all_k_at_least_3": self.all_k_at_least_3,
            "min_dynamic_degree": self.min_dynamic_degree,
            "dym_connected": self.dym_connected,
            "all_dynamic_degrees_even": self.all_dynamic_degrees_even,
            "ore_min_sum": self.ore_min_sum,
            "ore_min_pair": list(self.ore_min_pair) if self.ore_min_pair else None,
            "parts_consistent": self.parts_consistent,
            "parts_counterexample": (
                list(self.parts_counterexample) if self.parts_counterexample else None
            ),
            "max_cycle_d": self.max_cycle_d,
            "applicable": list(self.applicable),
            "premises_only": list(self.premises_only),
        }


def hypothesis_report(graph: HColoredMultigraph) -> HypothesisReport:
    dym = dynamic_graph(graph)
    rows = []
    for u in graph.vertices:
        cert = multipartite_certificate(auxiliary_graph(graph, u))
        rows.append(VertexReport(u, cert.ok, cert.k, cert.witness, dym.degree(u)))
    n = graph.n
    all_mp = all(r.multipartite for r in rows)
    ks = [r.k or 0 for r in rows]
    degs = [r.dynamic_degree for r in rows]

    ore_min, ore_pair = None, None
    for u, v in combinations(graph.vertices, 2):
        if dym.has_edge(u, v):
            continue
        s = dym.degree(u) + dym.degree(v)
        if ore_min is None or s < ore_min:
            ore_min, ore_pair = s, (u, v)

    # a dynamic bundle is only liftable if it holds two edges with adjacent colors
    parts_bad = None
    for u, v in dym.edges():
        if part_distinct_pair(graph, u, v) is None:
            parts_bad = (u, v)
            break

    all2 = n > 0 and all(k >= 2 for k in ks)
    some3 = any(k >= 3 for k in ks)
    all3 = n > 0 and all(k >= 3 for k in ks)
    min_deg = min(degs) if degs else None
    even = n > 0 and all(d % 2 == 0 and d >= 2 for d in degs)
    base = n > 0 and all_mp and all2 and parts_bad is None

    def ore_ok(bound: int) -> bool:
        return ore_min is None or ore_min >= bound

    applicable = []
    if base:
        if min_deg >= 2:
            applicable.append(LONG_CYCLE)
        if all3 and min_deg >= 2:
            applicable.append(PATH_OR_CYCLE)
        if dym.is_connected() and even:
            applicable.append(EULER)
        if n >= 3 and ore_ok(n):
            applicable.append(ORE_DYNAMIC)
        if n >= 3 and some3 and ore_ok(n + 1):
            applicable.append(ORE_H)
        if n >= 3 and 2 * min_deg >= n:
            applicable.append(DIRAC_DYNAMIC)
        if n >= 3 and some3 and 2 * min_deg >= n + 1:
            applicable.append(DIRAC_H)
    premises_only = []
    if n > 0 and all_mp and all2:
        if ore_ok(n - 1):
            premises_only.append(HAM_PATH_PREMISE)
        if ore_ok(n + 1):
            premises_only.append(HAM_CONNECTED_PREMISE)

    return HypothesisReport(
        n=n,
        vertices=tuple(rows),
        dynamic_edges=tuple(dym.edges()),
        all_multipartite=all_mp,
        all_k_at_least_2=all2,
        some_k_at_least_3=some3,
        all_k_at_least_3=all3,
        min_dynamic_degree=min_deg,
        dym_connected=dym.is_connected(),
        all_dynamic_degrees_even=even,
        ore_min_sum=ore_min,
        ore_min_pair=ore_pair,
        parts_consistent=parts_bad is None,
        parts_counterexample=parts_bad,
        applicable=tuple(applicable),
        premises_only=tuple(premises_only),
    )
