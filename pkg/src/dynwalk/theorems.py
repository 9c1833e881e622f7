"""Constructive versions of the existence results for dynamic H-cycles, H-paths and trails.

Every construction checks its premises, builds the object along the lines of
the existence argument, re-verifies it with :func:`verify_walk` and only then
returns it. A construction that fails on a valid input raises
:class:`InternalProofViolation`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import InternalProofViolation, PreconditionFailed
from .lifting import close_bundle, greedy_edges, lift_cycle, lift_closed
from .model import DynamicHWalk, HColoredMultigraph, Step, WalkClassification, verify_walk
from .structure import (
    DIRAC_DYNAMIC,
    DIRAC_H,
    EULER,
    LONG_CYCLE,
    ORE_DYNAMIC,
    ORE_H,
    PATH_OR_CYCLE,
    DynamicGraph,
    HypothesisReport,
    auxiliary_graph,
    dynamic_graph,
    hypothesis_report,
    multipartite_certificate,
)

DYNAMIC_CYCLE = "dynamic-H-cycle"
H_CYCLE = "H-cycle"
H_PATH = "H-path"
SPANNING_TRAIL = "spanning-closed-dynamic-H-trail"


@dataclass(frozen=True)
class ConstructionResult:
    walk: DynamicHWalk
    theorem: str
    guaranteed_length: int
    guaranteed_changes: int
    kind: str
    route: str
    classification: WalkClassification

    def summary(self) -> str:
        c = self.classification
        return f"{self.kind} via {self.theorem} [{self.route}]: length {c.length}, changes {c.changes}"


def confirms(graph: HColoredMultigraph, result: ConstructionResult) -> bool:
    """Re-check a result from scratch: kind, length bound and change bound."""
    c = verify_walk(graph, result.walk)
    if not c.is_dynamic_h_walk or c.length < result.guaranteed_length or c.changes > result.guaranteed_changes:
        return False
    if result.kind == DYNAMIC_CYCLE:
        return c.is_cycle
    if result.kind == H_CYCLE:
        return c.is_cycle and c.is_h_walk
    if result.kind == H_PATH:
        return c.is_path and c.is_h_walk
    if result.kind == SPANNING_TRAIL:
        return c.closed and c.is_trail and c.vertices_visited == graph.n
    return False


def _finish(graph, walk, theorem, length, changes, kind, route) -> ConstructionResult:
    result = ConstructionResult(walk, theorem, length, changes, kind, route, verify_walk(graph, walk))
    if not confirms(graph, result):
        raise InternalProofViolation(
            f"{theorem} produced {walk} which is not a {kind} with length >= {length}, "
            f"changes <= {changes}: {result.classification.summary()}"
        )
    return result


def _require_base(report: HypothesisReport) -> None:
    if report.n == 0:
        raise PreconditionFailed("graph has no vertices")
    for r in report.vertices:
        if not r.multipartite:
            raise PreconditionFailed(f"G_{r.vertex} is not complete multipartite {r.witness}", r.vertex)
        if r.k < 2:
            raise PreconditionFailed(f"k_{r.vertex} = {r.k} < 2", r.vertex)
    if not report.parts_consistent:
        u, v = report.parts_counterexample
        raise PreconditionFailed(
            f"E_{u}{v} is dynamic but no two of its edges lie in different parts", (u, v)
        )


def _require_min_degree(report: HypothesisReport, bound: float, label: str) -> None:
    for r in report.vertices:
        if r.dynamic_degree < bound:
            raise PreconditionFailed(
                f"dynamic degree of {r.vertex} is {r.dynamic_degree} < {label}", r.vertex
            )


def _require_ore(report: HypothesisReport, dym: DynamicGraph, bound: int) -> None:
    verts = dym.nodes
    for u, v in combinations(verts, 2):
        if not dym.has_edge(u, v) and dym.degree(u) + dym.degree(v) < bound:
            raise PreconditionFailed(
                f"non-dynamic pair {u},{v} has degree sum {dym.degree(u) + dym.degree(v)} < {bound}",
                (u, v),
            )


def grow_path(dym: DynamicGraph, seed: Sequence[str]) -> list[str]:
    """Extend ``seed`` in G_dym at the head, then at the tail, until both ends are stuck.

    Neighbors are scanned in vertex order. Vertices only join the path, so an
    end that is stuck stays stuck.
    """
    path = list(seed)
    on = set(path)
    while True:
        nxt = next((y for y in dym.neighbors(path[-1]) if y not in on), None)
        if nxt is None:
            break
        path.append(nxt)
        on.add(nxt)
    while True:
        nxt = next((y for y in dym.neighbors(path[0]) if y not in on), None)
        if nxt is None:
            break
        path.insert(0, nxt)
        on.add(nxt)
    return path


# ---------------------------------------------------------------------------
# long dynamic cycle


def long_dynamic_cycle(graph: HColoredMultigraph, d: int) -> ConstructionResult:
    """Dynamic H-cycle of length >= d+1 with at most one change."""
    if d < 2:
        raise PreconditionFailed(f"d = {d} must be at least 2", d)
    report = hypothesis_report(graph)
    _require_base(report)
    _require_min_degree(report, d, f"d = {d}")
    dym = dynamic_graph(graph)
    path = grow_path(dym, [graph.vertices[0]])
    x0 = path[0]
    j = max(i for i, x in enumerate(path) if dym.has_edge(x0, x))
    if j < d:
        raise InternalProofViolation(f"end of a stuck path has last neighbor at index {j} < {d}")
    walk = lift_cycle(graph, path[: j + 1])
    return _finish(graph, walk, LONG_CYCLE, d + 1, 1, DYNAMIC_CYCLE, f"stuck path of length {len(path) - 1}")


# ---------------------------------------------------------------------------
# H-path of length >= min{2d, n} or H-cycle of length >= d+1


def _pivot_triple(graph: HColoredMultigraph, dym: DynamicGraph, x: str):
    """Edges e, f in one dynamic bundle E_{x v} and g in another bundle at x, pairwise
    in different parts of G_x (pairwise adjacent colors)."""
    adj = graph.colors_adjacent
    for v in dym.neighbors(x):
        bundle = graph.bundle(x, v)
        for e, f in combinations(bundle, 2):
            if not adj(e, f):
                continue
            for g in graph.incident(x):
                if g not in bundle and adj(e, g) and adj(f, g):
                    return v, e, f, g
    return None


def path_or_cycle(graph: HColoredMultigraph, d: int) -> ConstructionResult:
    """H-path of length >= min{2d, n}, or an H-cycle of length >= d+1."""
    if d < 2:
        raise PreconditionFailed(f"d = {d} must be at least 2", d)
    report = hypothesis_report(graph)
    _require_base(report)
    for r in report.vertices:
        if r.k < 3:
            raise PreconditionFailed(f"k_{r.vertex} = {r.k} < 3", r.vertex)
    _require_min_degree(report, d, f"d = {d}")
    dym = dynamic_graph(graph)

    x = graph.vertices[0]
    triple = _pivot_triple(graph, dym, x)
    if triple is None:
        raise InternalProofViolation(f"no e, f, g in three parts of G_{x}")
    v_x, e_x, f_x, g_x = triple
    y_x = graph.edge(g_x).other(x)

    # special path: every hop dynamic except possibly x -> y_x
    seed = [v_x, x, y_x]
    path = grow_path(dym, seed)
    j = path.index(x)
    k = len(path) - 1
    if k < d:
        raise InternalProofViolation(f"stuck special path has length {k} < {d}")

    adj = graph.colors_adjacent
    if k >= 2 * d:
        back = greedy_edges(graph, path[j::-1], e_x)
        fwd = greedy_edges(graph, path[j:], g_x)
        edges = list(reversed(back)) + fwd
        walk = DynamicHWalk(tuple(Step(a, (e,)) for a, e in zip(path, edges)), path[-1], False)
        return _finish(graph, walk, PATH_OR_CYCLE, 2 * d, 0, H_PATH, f"special path of length {k}")

    if j + 1 <= d:
        # the u_0 end is stuck: its farthest dynamic neighbor closes a cycle through x
        p = max(i for i, u in enumerate(path) if dym.has_edge(path[0], u))
        if p < j + 1:
            raise InternalProofViolation(f"farthest neighbor of u_0 at {p} misses y_x at {j + 1}")
        seq = [x] + path[j + 1 : p + 1] + path[:j]
        route = f"front cycle, p = {p}"
    else:
        p = min(i for i, u in enumerate(path) if dym.has_edge(path[-1], u))
        if p > j - 1:
            raise InternalProofViolation(f"nearest neighbor of u_k at {p} misses v_x at {j - 1}")
        seq = [x] + path[j + 1 :] + path[p:j]
        route = f"back cycle, p = {p}"

    edges = greedy_edges(graph, seq, g_x)
    closing = next((c for c in (e_x, f_x) if adj(edges[-1], c)), None)
    if closing is None or not adj(closing, g_x):
        raise InternalProofViolation(f"neither {e_x} nor {f_x} closes the cycle at {v_x}")
    steps = [Step(a, (e,)) for a, e in zip(seq, edges)] + [Step(seq[-1], (closing,))]
    walk = DynamicHWalk(tuple(steps), x, True)
    return _finish(graph, walk, PATH_OR_CYCLE, d + 1, 0, H_CYCLE, route)


# ---------------------------------------------------------------------------
# spanning closed dynamic H-trail


def euler_circuit(dym: DynamicGraph, start: str) -> list[str]:
    """Closed Euler trail (Hierholzer). Returns x_0..x_m with x_m == x_0."""
    remaining = {u: list(dym.neighbors(u)) for u in dym.nodes}
    used: set[frozenset] = set()
    stack, circuit = [start], []
    while stack:
        u = stack[-1]
        nbrs = remaining[u]
        while nbrs and frozenset((u, nbrs[0])) in used:
            nbrs.pop(0)
        if nbrs:
            v = nbrs.pop(0)
            used.add(frozenset((u, v)))
            stack.append(v)
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    return circuit


def spanning_closed_trail(graph: HColoredMultigraph) -> ConstructionResult:
    report = hypothesis_report(graph)
    _require_base(report)
    dym = dynamic_graph(graph)
    if not dym.is_connected():
        raise PreconditionFailed("G_dym is disconnected", graph.vertices[0])
    for r in report.vertices:
        if r.dynamic_degree < 2 or r.dynamic_degree % 2:
            raise PreconditionFailed(
                f"dynamic degree of {r.vertex} is {r.dynamic_degree}, not even and positive", r.vertex
            )
    circuit = euler_circuit(dym, graph.vertices[0])
    if len(circuit) - 1 != len(dym.edges()):
        raise InternalProofViolation("Euler circuit misses edges of G_dym")
    walk = lift_closed(graph, circuit[:-1])
    return _finish(graph, walk, EULER, len(circuit) - 1, 1, SPANNING_TRAIL, "Euler circuit of G_dym")


# ---------------------------------------------------------------------------
# Hamiltonian cycles under Ore/Dirac-type bounds


def ore_cycle(dym: DynamicGraph) -> tuple[list[str], int]:
    """Hamiltonian cycle of an Ore graph by crossing-pair exchanges.

    Starts from the vertex order; each exchange removes at least one
    non-adjacent consecutive pair. Returns the cycle and the exchange count.
    """
    cyc = list(dym.nodes)
    n = len(cyc)
    exchanges = 0

    def gaps(c):
        return sum(1 for i in range(n) if not dym.has_edge(c[i], c[(i + 1) % n]))

    while True:
        bad = next((i for i in range(n) if not dym.has_edge(cyc[i], cyc[(i + 1) % n])), None)
        if bad is None:
            return cyc, exchanges
        # rotate so the gap sits between the last and the first vertex
        u = cyc[bad + 1 :] + cyc[: bad + 1]
        first, last = u[0], u[-1]
        k = next(
            (k for k in range(1, n - 1) if dym.has_edge(first, u[k]) and dym.has_edge(last, u[k - 1])),
            None,
        )
        if k is None:
            raise InternalProofViolation(f"no crossing pair for gap {last},{first}")
        new = u[:k] + u[k:][::-1]
        if gaps(new) >= gaps(u):
            raise InternalProofViolation("exchange did not reduce the number of gaps")
        cyc = new
        exchanges += 1
        if exchanges > n * n:
            raise InternalProofViolation("exchange loop did not terminate")


def ore_hamiltonian_dynamic_cycle(graph: HColoredMultigraph) -> ConstructionResult:
    report = hypothesis_report(graph)
    _require_base(report)
    if graph.n < 3:
        raise PreconditionFailed("a Hamiltonian cycle needs at least three vertices", graph.n)
    dym = dynamic_graph(graph)
    _require_ore(report, dym, graph.n)
    return _ore_dynamic(graph, dym, ORE_DYNAMIC)


def _ore_dynamic(graph, dym, theorem) -> ConstructionResult:
    cyc, swaps = ore_cycle(dym)
    walk = lift_cycle(graph, cyc)
    return _finish(graph, walk, theorem, graph.n, 1, DYNAMIC_CYCLE, f"{swaps} exchanges")


def _restricted_k(graph: HColoredMultigraph, x: str, a: str, b: str) -> int:
    """Number of parts of G_x restricted to E_xa and E_xb."""
    cert = multipartite_certificate(auxiliary_graph(graph, x))
    return len({cert.part_of(e) for e in graph.bundle(x, a) + graph.bundle(x, b)})


def _cycle_walk(graph, seq: list[str], first: str, closer=None) -> DynamicHWalk:
    """Lift ``seq`` from ``first`` and close back to seq[0] with a single edge.

    ``closer`` lists candidate closing edges; by default the closing edge is
    the one the greedy step would pick from the last bundle.
    """
    edges = greedy_edges(graph, seq, first)
    adj = graph.colors_adjacent
    if closer is None:
        closing = close_bundle(graph, edges[-1], seq[-1], seq[0], first)
        if len(closing) != 1:
            raise InternalProofViolation(f"closing bundle {closing} needs a change")
    else:
        c = next((c for c in closer if adj(edges[-1], c)), None)
        if c is None or not adj(c, first):
            raise InternalProofViolation(f"none of {closer} closes after {edges[-1]}")
        closing = (c,)
    steps = [Step(a, (e,)) for a, e in zip(seq, edges)] + [Step(seq[-1], closing)]
    return DynamicHWalk(tuple(steps), seq[0], True)


def _three_part_case(graph, cyc: list[str], i: int) -> DynamicHWalk | None:
    n = len(cyc)
    x, prev, nxt = cyc[i], cyc[i - 1], cyc[(i + 1) % n]
    adj = graph.colors_adjacent
    b_prev, b_next = graph.bundle(x, prev), graph.bundle(x, nxt)
    for e in b_prev:
        for g in b_next:
            if not adj(e, g):
                continue
            for f in b_prev + b_next:
                if f in (e, g) or not (adj(f, e) and adj(f, g)):
                    continue
                if f in b_prev:
                    # leave x along g, come back from prev via e or f
                    seq = [x] + cyc[i + 1 :] + cyc[:i]
                    return _cycle_walk(graph, seq, g, closer=(e, f))
                seq = [x] + cyc[:i][::-1] + cyc[i + 1 :][::-1]
                return _cycle_walk(graph, seq, e, closer=(f, g))
    return None


def _bipartite_case(graph, dym: DynamicGraph, cyc: list[str]) -> tuple[DynamicHWalk, str]:
    n = len(cyc)
    x0 = cyc[0]
    adj = graph.colors_adjacent
    near = graph.bundle(x0, cyc[1]) + graph.bundle(x0, cyc[-1])
    pos = {v: i for i, v in enumerate(cyc)}
    A = [g for g in graph.incident(x0) if all(adj(g, e) for e in near)]
    if not A:
        raise InternalProofViolation(f"no edge at {x0} outside the two cycle parts")
    p = max(pos[graph.edge(g).other(x0)] for g in A)
    if p in (0, 1, n - 1):
        raise InternalProofViolation(f"index p = {p} is a cycle neighbor of {x0}")
    g = next(g for g in A if pos[graph.edge(g).other(x0)] == p)
    x = cyc + [x0]  # x[n] == x0

    def dyn(a: int, b: int) -> bool:
        return dym.has_edge(x[a], x[b])

    if dyn(1, p + 1):
        seq = [x0] + x[p:0:-1] + x[p + 1 : n]
        return _cycle_walk(graph, seq, g), "two parts, direct chord"
    for j in range(3, p + 1):
        if dyn(1, j) and dyn(p + 1, j - 1):
            seq = [x0] + x[p : j - 1 : -1] + x[1:j] + x[p + 1 : n]
            return _cycle_walk(graph, seq, g), f"two parts, lower crossing j = {j}"
    for j in range(p + 2, n):
        if dyn(1, j) and dyn(p + 1, j + 1):
            if j == n - 1:
                seq = [x0] + x[p:0:-1] + x[n - 1 : p : -1]
            else:
                seq = [x0] + x[p:0:-1] + x[j:p:-1] + x[j + 1 : n]
            return _cycle_walk(graph, seq, g), f"two parts, upper crossing j = {j}"
    raise InternalProofViolation(
        f"no crossing for {x[1]},{x[p + 1]} although their dynamic degrees sum to "
        f"{dym.degree(x[1]) + dym.degree(x[p + 1])}"
    )


def ore_hamiltonian_h_cycle(graph: HColoredMultigraph) -> ConstructionResult:
    report = hypothesis_report(graph)
    _require_base(report)
    if graph.n < 3:
        raise PreconditionFailed("a Hamiltonian cycle needs at least three vertices", graph.n)
    rich = [r.vertex for r in report.vertices if r.k >= 3]
    if not rich:
        raise PreconditionFailed("no vertex has k_u >= 3")
    dym = dynamic_graph(graph)
    _require_ore(report, dym, graph.n + 1)
    return _ore_h(graph, dym, rich[0], ORE_H)


def _ore_h(graph, dym, x0, theorem) -> ConstructionResult:
    cyc, _ = ore_cycle(dym)
    i0 = cyc.index(x0)
    cyc = cyc[i0:] + cyc[:i0]
    n = len(cyc)
    for i in range(n):
        if _restricted_k(graph, cyc[i], cyc[i - 1], cyc[(i + 1) % n]) >= 3:
            walk = _three_part_case(graph, cyc, i)
            if walk is None:
                raise InternalProofViolation(f"three parts at {cyc[i]} but no e, f, g")
            return _finish(graph, walk, theorem, n, 0, H_CYCLE, f"three parts at {cyc[i]}")
    walk, route = _bipartite_case(graph, dym, cyc)
    return _finish(graph, walk, theorem, n, 0, H_CYCLE, route)


def dirac_dynamic(graph: HColoredMultigraph) -> ConstructionResult:
    report = hypothesis_report(graph)
    _require_base(report)
    if graph.n < 3:
        raise PreconditionFailed("a Hamiltonian cycle needs at least three vertices", graph.n)
    _require_min_degree(report, graph.n / 2, "n/2")
    return _ore_dynamic(graph, dynamic_graph(graph), DIRAC_DYNAMIC)


def dirac_h(graph: HColoredMultigraph) -> ConstructionResult:
    report = hypothesis_report(graph)
    _require_base(report)
    if graph.n < 3:
        raise PreconditionFailed("a Hamiltonian cycle needs at least three vertices", graph.n)
    _require_min_degree(report, (graph.n + 1) / 2, "(n+1)/2")
    rich = [r.vertex for r in report.vertices if r.k >= 3]
    if not rich:
        raise PreconditionFailed("no vertex has k_u >= 3")
    return _ore_h(graph, dynamic_graph(graph), rich[0], DIRAC_H)


GOALS = {
    LONG_CYCLE: long_dynamic_cycle,
    PATH_OR_CYCLE: path_or_cycle,
    EULER: spanning_closed_trail,
    ORE_DYNAMIC: ore_hamiltonian_dynamic_cycle,
    ORE_H: ore_hamiltonian_h_cycle,
    DIRAC_DYNAMIC: dirac_dynamic,
    DIRAC_H: dirac_h,
}
