"""Exhaustive ground truth for small instances.

Nothing here uses dynamic edge sets, auxiliary graphs or lifting; the search
only reads edge colors and pattern adjacency. Only the first and last edge of a
bundle take part in transition constraints, so bundles are searched as
(first, last) pairs, which is complete for existence and length questions.
Colors with identical pattern neighborhoods are interchangeable and are merged
before the subset dynamic programs run.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .errors import BadParameters, BoundsExceeded
from .model import DynamicHWalk, HColoredMultigraph, Step, natural_key

DEFAULT_MAX_N = 10
DEFAULT_MAX_BUNDLE = 4

TARGETS = (
    "h-cycle-through",
    "longest-dynamic-h-cycle",
    "longest-h-cycle",
    "longest-h-path",
    "hamiltonian-h-cycle",
    "hamiltonian-dynamic-h-cycle",
    "spanning-closed-dynamic-h-trail",
    "enumerate-dynamic-h-cycles",
)


def max_vertices() -> int:
    raw = os.environ.get("DYNWALK_ORACLE_MAX_N")
    return int(raw) if raw else DEFAULT_MAX_N


@dataclass(frozen=True)
class OracleQuery:
    target: str
    vertex: str | None = None
    min_len: int = 0
    max_len: int | None = None
    minimal_bundles: bool = True
    max_n: int | None = None
    max_bundle: int = DEFAULT_MAX_BUNDLE


def check_bounds(graph: HColoredMultigraph, max_n: int | None = None, max_bundle: int = DEFAULT_MAX_BUNDLE) -> None:
    cap = max_vertices() if max_n is None else max_n
    if graph.n > cap:
        raise BoundsExceeded(f"{graph.n} vertices exceed the oracle cap of {cap}")
    if graph.max_bundle_width() > max_bundle:
        raise BoundsExceeded(f"a bundle of {graph.max_bundle_width()} edges exceeds the cap of {max_bundle}")


class _Space:
    """Index-level view of a graph for the subset searches."""

    def __init__(self, graph: HColoredMultigraph, dynamic: bool):
        self.graph = graph
        self.verts = list(graph.vertices)
        self.index = {v: i for i, v in enumerate(self.verts)}
        pat = graph.pattern
        sigs: dict[frozenset, int] = {}
        cls = {}
        for c in sorted(pat.colors, key=natural_key):
            cls[c] = sigs.setdefault(pat.neighborhood(c), len(sigs))
        self.ncls = len(sigs)
        inv = {i: sig for sig, i in sigs.items()}
        rep = {}
        for c, i in cls.items():
            rep.setdefault(i, c)
        # adj_mask[a]: bitmask of classes adjacent to class a
        self.adj_mask = [
            sum(1 << b for b in range(self.ncls) if rep[b] in inv[a]) for a in range(self.ncls)
        ]
        self.edge_cls = {e.id: cls[e.color] for e in graph.edges}
        n = len(self.verts)
        # moves[v][w] = set of (in class, out class) a bundle v -> w can realize
        self.moves: list[list[frozenset]] = [[frozenset()] * n for _ in range(n)]
        for (a, b), ids in graph.bundles().items():
            cs = [self.edge_cls[e] for e in ids]
            if dynamic:
                pairs = frozenset((x, y) for x in cs for y in cs)
            else:
                pairs = frozenset((x, x) for x in cs)
            i, j = self.index[a], self.index[b]
            self.moves[i][j] = pairs
            self.moves[j][i] = frozenset((y, x) for x, y in pairs)
        self.step = lru_cache(maxsize=None)(self._step)

    def _step(self, v: int, w: int, last_mask: int) -> int:
        """Out-class mask reachable on bundle v -> w after arriving with classes ``last_mask``."""
        out = 0
        for x, y in self.moves[v][w]:
            if last_mask & self._adjacent_to(x):
                out |= 1 << y
        return out

    def _adjacent_to(self, x: int) -> int:
        return self.adj_mask[x]

    def closes(self, last_mask: int, first: int) -> bool:
        return bool(last_mask & self.adj_mask[first])


def _cycle_sets(space: _Space) -> set[int]:
    """Vertex masks of every set carrying a cycle of length >= 3 in the given mode."""
    n = len(space.verts)
    found: set[int] = set()
    for s in range(n):
        for first in range(space.ncls):
            # state: (mask, v) -> out-class mask; first bundle leaves s with class ``first``
            layer: dict[tuple[int, int], int] = {}
            for w in range(s + 1, n):
                out = 0
                for x, y in space.moves[s][w]:
                    if x == first:
                        out |= 1 << y
                if out:
                    layer[(1 << s) | (1 << w), w] = out
            while layer:
                nxt: dict[tuple[int, int], int] = {}
                for (mask, v), last in layer.items():
                    if mask.bit_count() >= 3 and mask not in found:
                        back = space.step(v, s, last)
                        if space.closes(back, first):
                            found.add(mask)
                    for w in range(s + 1, n):
                        if mask >> w & 1 or not space.moves[v][w]:
                            continue
                        out = space.step(v, w, last)
                        if out:
                            key = (mask | 1 << w, w)
                            nxt[key] = nxt.get(key, 0) | out
                layer = nxt
    return found


def _two_cycles(graph: HColoredMultigraph, dynamic: bool) -> set[frozenset]:
    """Vertex pairs carrying a closed walk u -> v -> u on distinct edges."""
    adj = graph.colors_adjacent
    out = set()
    for (a, b), ids in graph.bundles().items():
        if len(ids) < 2:
            continue
        if not dynamic:
            if any(adj(e, f) for e, f in combinations(ids, 2)):
                out.add(frozenset((a, b)))
            continue
        # split the bundle into two disjoint lanes; each lane is (first, last)
        for e1, e2, f1, f2 in product(ids, repeat=4):
            if len({e1, e2} & {f1, f2}):
                continue
            if adj(e2, f1) and adj(f2, e1):
                out.add(frozenset((a, b)))
                break
    return out


def _path_sets(space: _Space) -> int:
    """Longest H-path length (edges) in the given mode."""
    n = len(space.verts)
    if n == 0:
        return 0
    best = 0
    layer: dict[tuple[int, int], int] = {}
    for s in range(n):
        for w in range(n):
            out = 0
            for _, y in space.moves[s][w]:
                out |= 1 << y
            if out:
                layer[(1 << s) | (1 << w), w] = layer.get(((1 << s) | (1 << w), w), 0) | out
    length = 1 if layer else 0
    while layer:
        best = length
        nxt: dict[tuple[int, int], int] = {}
        for (mask, v), last in layer.items():
            for w in range(n):
                if mask >> w & 1 or not space.moves[v][w]:
                    continue
                out = space.step(v, w, last)
                if out:
                    key = (mask | 1 << w, w)
                    nxt[key] = nxt.get(key, 0) | out
        layer = nxt
        length += 1
    return best


def cycle_vertex_sets(graph: HColoredMultigraph, dynamic: bool) -> set[frozenset[str]]:
    """Every vertex set that carries an (dynamic) H-cycle, lengths 2 and up."""
    space = _Space(graph, dynamic)
    sets = {frozenset(space.verts[i] for i in range(len(space.verts)) if m >> i & 1) for m in _cycle_sets(space)}
    return sets | _two_cycles(graph, dynamic)


def longest_cycle(graph: HColoredMultigraph, dynamic: bool) -> int:
    check_bounds(graph)
    return max((len(s) for s in cycle_vertex_sets(graph, dynamic)), default=0)


def exists_h_cycle_through(graph: HColoredMultigraph, v: str, min_len: int = 2) -> bool:
    check_bounds(graph)
    graph.neighbors(v)
    return any(v in s and len(s) >= min_len for s in cycle_vertex_sets(graph, dynamic=False))


def has_hamiltonian_cycle(graph: HColoredMultigraph, dynamic: bool) -> bool:
    check_bounds(graph)
    if graph.n < 2:
        return False
    return frozenset(graph.vertices) in cycle_vertex_sets(graph, dynamic)


def longest_h_path(graph: HColoredMultigraph) -> int:
    check_bounds(graph)
    return _path_sets(_Space(graph, dynamic=False))


def has_spanning_closed_dynamic_trail(graph: HColoredMultigraph) -> bool:
    """Closed dynamic H-walk repeating no edge and visiting every vertex.

    Depth-first over (first, last) lanes with iterative deepening on the step
    count; a lane of two edges uses both.
    """
    check_bounds(graph)
    n = graph.n
    if n < 2:
        return False
    space = _Space(graph, dynamic=True)
    bit = {e.id: 1 << i for i, e in enumerate(graph.edges)}
    cls = space.edge_cls
    start = space.index[graph.vertices[0]]
    full = (1 << n) - 1
    lanes: list[list[tuple[int, int, int, int]]] = [[] for _ in range(n)]
    for (a, b), ids in graph.bundles().items():
        i, j = space.index[a], space.index[b]
        for e in ids:
            for f in ids:
                used = bit[e] | bit[f]
                lanes[i].append((j, cls[e], cls[f], used))
                lanes[j].append((i, cls[e], cls[f], used))
    for row in lanes:
        row.sort(key=lambda t: t[3].bit_count())
    adj = space.adj_mask
    incident = [0] * n
    for e in graph.edges:
        incident[space.index[e.u]] |= bit[e.id]
        incident[space.index[e.v]] |= bit[e.id]
    seen: set = set()

    def stranded(used: int, visited: int) -> bool:
        # an unvisited vertex must still have a way in and out, the start a way back
        free = ~used
        if not incident[start] & free:
            return True
        return any(
            not visited >> u & 1 and (incident[u] & free).bit_count() < 2 for u in range(n)
        )

    def dfs(v: int, last: int, first: int, used: int, visited: int, budget: int) -> bool:
        # every unvisited vertex costs a step, and one more step returns to the start
        if budget < n - visited.bit_count() + 1:
            return False
        key = (v, last, first, used, visited, budget)
        if key in seen:
            return False
        seen.add(key)
        if stranded(used, visited):
            return False
        order = sorted(lanes[v], key=lambda t: (visited >> t[0]) & 1)
        for w, x, y, lane in order:
            if used & lane or not adj[last] >> x & 1:
                continue
            # a two-edge lane whose last edge could follow directly is dominated
            if lane.bit_count() == 2 and adj[last] >> y & 1:
                continue
            vis = visited | 1 << w
            if w == start and vis == full and adj[y] >> first & 1:
                return True
            if dfs(w, y, first, used | lane, vis, budget - 1):
                return True
        return False

    # iterative deepening on the number of steps; a trail has at most |E| of them
    for length in range(n, len(graph.edges) + 1):
        seen.clear()
        if any(
            dfs(w, y, x, lane, (1 << start) | (1 << w), length - 1)
            for w, x, y, lane in lanes[start]
        ):
            return True
    return False


def enumerate_dynamic_cycles(
    graph: HColoredMultigraph, max_len: int, through: str | None = None, minimal_bundles: bool = True
) -> list[DynamicHWalk]:
    """All dynamic H-cycles up to ``max_len`` with bundles of at most two edges.

    Cycles start at their least vertex and run in the direction whose second
    vertex is smaller. With ``minimal_bundles`` a two-edge bundle is kept only
    when no single edge of it fits between its neighbors.
    """
    check_bounds(graph)
    adj = graph.colors_adjacent
    key = natural_key
    verts = sorted(graph.vertices, key=key)
    out: list[DynamicHWalk] = []

    def options(a: str, b: str) -> list[tuple[str, ...]]:
        ids = graph.bundle(a, b)
        return [(e,) for e in ids] + [(e, f) for e in ids for f in ids if e != f]

    def realize(cyc: list[str]) -> None:
        hops = list(zip(cyc, cyc[1:] + cyc[:1]))
        choices = [options(a, b) for a, b in hops]
        for combo in product(*choices):
            ids = [e for b in combo for e in b]
            if len(ids) != len(set(ids)):
                continue
            L = len(combo)
            if not all(adj(combo[i][-1], combo[(i + 1) % L][0]) for i in range(L)):
                continue
            if minimal_bundles and any(
                len(combo[i]) == 2
                and any(
                    adj(combo[i - 1][-1], e) and adj(e, combo[(i + 1) % L][0])
                    for e in graph.bundle(*hops[i])
                )
                for i in range(L)
            ):
                continue
            out.append(DynamicHWalk(tuple(Step(v, b) for v, b in zip(cyc, combo)), cyc[0], True))

    def extend(cyc: list[str]) -> None:
        s, v = cyc[0], cyc[-1]
        if len(cyc) >= 2 and s in graph.neighbors(v):
            if len(cyc) == 2 or key(cyc[1]) < key(cyc[-1]):
                if through is None or through in cyc:
                    realize(cyc)
        if len(cyc) == max_len:
            return
        for w in graph.neighbors(v):
            if key(w) > key(s) and w not in cyc:
                extend(cyc + [w])

    for s in verts:
        extend([s])
    return out


def oracle_solve(graph: HColoredMultigraph, query: OracleQuery):
    check_bounds(graph, query.max_n, query.max_bundle)
    t = query.target
    if t == "h-cycle-through":
        if query.vertex is None:
            raise BadParameters("h-cycle-through needs a vertex")
        return exists_h_cycle_through(graph, query.vertex, max(query.min_len, 2))
    if t == "longest-dynamic-h-cycle":
        return longest_cycle(graph, dynamic=True)
    if t == "longest-h-cycle":
        return longest_cycle(graph, dynamic=False)
    if t == "longest-h-path":
        return longest_h_path(graph)
    if t == "hamiltonian-h-cycle":
        return has_hamiltonian_cycle(graph, dynamic=False)
    if t == "hamiltonian-dynamic-h-cycle":
        return has_hamiltonian_cycle(graph, dynamic=True)
    if t == "spanning-closed-dynamic-h-trail":
        return has_spanning_closed_dynamic_trail(graph)
    if t == "enumerate-dynamic-h-cycles":
        max_len = query.max_len if query.max_len is not None else graph.n
        return enumerate_dynamic_cycles(graph, max_len, query.vertex, query.minimal_bundles)
    raise BadParameters(f"unknown oracle target {t!r}")
