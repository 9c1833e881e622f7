"""Edge-colored multigraphs with colors 1..c and properly colored Hamiltonian cycles.

A c-edge-colored multigraph is an H-colored multigraph whose pattern is the
complete loopless graph on the c colors; H-walks are then exactly the properly
colored walks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .errors import (
    DanglingEndpoint,
    DuplicateEdgeId,
    InternalProofViolation,
    LoopEdge,
    PreconditionFailed,
    UnknownColor,
    UnknownVertex,
)
from .model import HColoredMultigraph, PatternGraph, build_graph, natural_key, sort_ids
from .structure import HypothesisReport, dynamic_graph, hypothesis_report
from .theorems import ConstructionResult, dirac_h, ore_hamiltonian_h_cycle


@dataclass(frozen=True)
class EdgeColoredMultigraph:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, str, int], ...]
    c: int
    dropped: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        verts = set(self.vertices)
        seen = set()
        for eid, u, v, color in self.edges:
            if eid in seen:
                raise DuplicateEdgeId(f"duplicate edge id {eid!r}")
            seen.add(eid)
            if u == v:
                raise LoopEdge(f"edge {eid} is a loop at {u}")
            for x in (u, v):
                if x not in verts:
                    raise DanglingEndpoint(f"edge {eid} uses unknown vertex {x!r}")
            if not 1 <= color <= self.c:
                raise UnknownColor(f"edge {eid} has color {color} outside 1..{self.c}")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def bundle_colors(self, u: str, v: str) -> list[int]:
        return [col for _, a, b, col in self.edges if {a, b} == {u, v}]


def edge_colored(vertices, edges, c: int) -> EdgeColoredMultigraph:
    """Build from ``(id, u, v, color)`` records, coercing ids to str and colors to int."""
    recs = tuple(
        sorted(((str(e), str(u), str(v), int(col)) for e, u, v, col in edges), key=lambda r: natural_key(r[0]))
    )
    return EdgeColoredMultigraph(sort_ids(str(v) for v in vertices), recs, int(c))


def normalize(ecm: EdgeColoredMultigraph) -> EdgeColoredMultigraph:
    """Drop same-colored parallel edges, keeping the least id of each group.

    The removed ids are recorded in ``dropped``; color degrees do not change.
    """
    keep, dropped = [], list(ecm.dropped)
    seen = set()
    for rec in ecm.edges:
        eid, u, v, col = rec
        key = (frozenset((u, v)), col)
        if key in seen:
            dropped.append(eid)
        else:
            seen.add(key)
            keep.append(rec)
    if not dropped and not ecm.dropped:
        return ecm
    return EdgeColoredMultigraph(ecm.vertices, tuple(keep), ecm.c, tuple(dropped))


def complete_pattern(c: int) -> PatternGraph:
    return PatternGraph.complete(range(1, c + 1))


def to_h_colored(ecm: EdgeColoredMultigraph) -> HColoredMultigraph:
    ecm = normalize(ecm)
    return build_graph(ecm.vertices, ecm.edges, complete_pattern(ecm.c))


def color_degree(ecm: EdgeColoredMultigraph, x: str, i: int) -> int:
    """Number of distinct neighbors joined to ``x`` by an edge of color ``i``."""
    if x not in ecm.vertices:
        raise UnknownVertex(x)
    if not 1 <= i <= ecm.c:
        raise UnknownColor(f"color {i} outside 1..{ecm.c}")
    return len({v if u == x else u for _, u, v, col in ecm.edges if col == i and x in (u, v)})


def colors_at(ecm: EdgeColoredMultigraph, x: str) -> set[int]:
    return {col for _, u, v, col in ecm.edges if x in (u, v)}


def is_properly_colored(graph: HColoredMultigraph, edge_ids, closed: bool) -> bool:
    ids = list(edge_ids)
    pairs = list(zip(ids, ids[1:]))
    if closed and len(ids) > 1:
        pairs.append((ids[-1], ids[0]))
    return all(graph.color(a) != graph.color(b) for a, b in pairs)


def _check_pc_premise(ecm: EdgeColoredMultigraph) -> None:
    if ecm.c < 3:
        raise PreconditionFailed(f"needs at least 3 colors, got c = {ecm.c}", ecm.c)
    for u, v in combinations(ecm.vertices, 2):
        width = len(ecm.bundle_colors(u, v))
        if width > ecm.c - 1:
            raise PreconditionFailed(f"E_{u}{v} has {width} edges > c - 1 = {ecm.c - 1}", (u, v))
    for x in ecm.vertices:
        for i in range(1, ecm.c + 1):
            if 2 * color_degree(ecm, x, i) < ecm.n:
                raise PreconditionFailed(
                    f"color degree d_{i}({x}) = {color_degree(ecm, x, i)} < n/2 = {ecm.n / 2}", (x, i)
                )


def pc_hamiltonian(ecm: EdgeColoredMultigraph) -> ConstructionResult:
    """Properly colored Hamiltonian cycle under per-color degree bounds.

    Requires c >= 3, at most c - 1 edges per vertex pair and every color degree
    at least n/2. Those bounds force every dynamic degree up to (n+1)/2, which
    is asserted before the Dirac-type construction runs.
    """
    ecm = normalize(ecm)
    _check_pc_premise(ecm)
    graph = to_h_colored(ecm)
    dym = dynamic_graph(graph)
    for x in graph.vertices:
        if 2 * dym.degree(x) < graph.n + 1:
            raise InternalProofViolation(
                f"dynamic degree of {x} is {dym.degree(x)} < (n+1)/2 although the color degrees allow it"
            )
    result = dirac_h(graph)
    if not is_properly_colored(graph, result.walk.edge_ids, closed=True):
        raise InternalProofViolation(f"cycle {result.walk} repeats a color")
    return result


@dataclass(frozen=True)
class PCReport:
    report: HypothesisReport
    two_colors_everywhere: bool
    some_three_colors: bool
    min_pair_sum: int | None
    min_pair: tuple[str, str] | None
    min_dynamic_degree: int | None
    ore_applies: bool
    dirac_applies: bool
    degree_premise: bool
    dropped: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "two_colors_everywhere": self.two_colors_everywhere,
            "some_three_colors": self.some_three_colors,
            "min_pair_sum": self.min_pair_sum,
            "min_pair": list(self.min_pair) if self.min_pair else None,
            "min_dynamic_degree": self.min_dynamic_degree,
            "ore_applies": self.ore_applies,
            "dirac_applies": self.dirac_applies,
            "degree_premise": self.degree_premise,
            "dropped": list(self.dropped),
        }


def pc_corollary_checks(ecm: EdgeColoredMultigraph) -> PCReport:
    ecm = normalize(ecm)
    graph = to_h_colored(ecm)
    report = hypothesis_report(graph)
    n = ecm.n
    counts = {x: len(colors_at(ecm, x)) for x in ecm.vertices}
    two = n > 0 and all(k >= 2 for k in counts.values())
    three = any(k >= 3 for k in counts.values())
    best, pair = None, None
    for u, v in combinations(ecm.vertices, 2):
        s = report.delta(u) + report.delta(v)
        if best is None or s < best:
            best, pair = s, (u, v)
    min_deg = report.min_dynamic_degree
    try:
        _check_pc_premise(ecm)
        degree_premise = True
    except PreconditionFailed:
        degree_premise = False
    return PCReport(
        report=report,
        two_colors_everywhere=two,
        some_three_colors=three,
        min_pair_sum=best,
        min_pair=pair,
        min_dynamic_degree=min_deg,
        ore_applies=n >= 3 and two and three and best is not None and best >= n + 1,
        dirac_applies=n >= 3 and two and three and min_deg is not None and 2 * min_deg >= n + 1,
        degree_premise=degree_premise,
        dropped=ecm.dropped,
    )


def pc_corollary_construct(ecm: EdgeColoredMultigraph) -> ConstructionResult:
    """Properly colored Hamiltonian cycle from whichever degree-sum corollary applies."""
    checks = pc_corollary_checks(ecm)
    graph = to_h_colored(ecm)
    if checks.dirac_applies:
        return dirac_h(graph)
    if checks.ore_applies:
        return ore_hamiltonian_h_cycle(graph)
    if not checks.two_colors_everywhere:
        raise PreconditionFailed("some vertex sees fewer than two colors")
    if not checks.some_three_colors:
        raise PreconditionFailed("no vertex sees three colors")
    raise PreconditionFailed(
        f"pair {checks.min_pair} has dynamic degree sum {checks.min_pair_sum} < n + 1", checks.min_pair
    )


def pair_colored_k4() -> EdgeColoredMultigraph:
    """K_4 on a, b, c, d where each perfect matching misses one of the colors 1, 2, 3."""
    matchings = {(1, 2): (2, 3), (3, 4): (2, 3), (1, 3): (1, 3), (2, 4): (1, 3), (1, 4): (1, 2), (2, 3): (1, 2)}
    names = {1: "a", 2: "b", 3: "c", 4: "d"}
    edges, k = [], 1
    for (u, v), cols in matchings.items():
        for col in cols:
            edges.append((f"e{k}", names[u], names[v], col))
            k += 1
    return edge_colored(names.values(), edges, 3)


def _degree_filled(rng: random.Random, n: int, c: int) -> EdgeColoredMultigraph:
    verts = [f"v{i}" for i in range(n)]
    cols: dict[frozenset, set[int]] = {frozenset(p): set() for p in combinations(verts, 2)}
    for i in range(1, c + 1):
        for x in verts:
            have = [y for y in verts if y != x and i in cols[frozenset((x, y))]]
            need = -(-n // 2) - len(have)
            free = [y for y in verts if y != x and i not in cols[frozenset((x, y))]]
            for y in rng.sample(free, max(0, need)):
                cols[frozenset((x, y))].add(i)
    # one pair carries every color, which the proved statement forbids
    full = rng.choice(sorted(cols, key=lambda p: sorted(p)))
    cols[full] = set(range(1, c + 1))
    edges, k = [], 1
    for pair in sorted(cols, key=lambda p: sorted(p, key=natural_key)):
        u, v = sorted(pair, key=natural_key)
        for col in sorted(cols[pair]):
            edges.append((f"e{k}", u, v, col))
            k += 1
    return edge_colored(verts, edges, c)


def explore_without_bundle_clause(n: int, c: int, trials: int, seed: int = 0) -> list[EdgeColoredMultigraph]:
    """Search small instances meeting the color-degree bound with some pair carrying all c colors.

    Returns every sampled instance that has no properly colored Hamiltonian
    cycle according to the exhaustive oracle; an empty list means none found.
    """
    from .oracle import has_hamiltonian_cycle

    if c < 3:
        raise PreconditionFailed(f"needs at least 3 colors, got c = {c}", c)
    rng = random.Random(f"pc-explore/{n}/{c}/{seed}")
    found = []
    for _ in range(trials):
        ecm = _degree_filled(rng, n, c)
        if not has_hamiltonian_cycle(to_h_colored(ecm), dynamic=False):
            found.append(ecm)
    return found
