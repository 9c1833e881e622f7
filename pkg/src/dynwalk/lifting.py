"""Lift vertex walks along dynamic bundles to H-walks, closing with at most one lane change."""

from __future__ import annotations

from typing import Sequence

from .errors import InternalProofViolation, NotACycle, NotAPath, PreconditionFailed
from .model import DynamicHWalk, HColoredMultigraph, Step
from .structure import (
    auxiliary_graph,
    is_dynamic_edge_set,
    multipartite_certificate,
    part_distinct_pair,
)


def _check_vertices(graph: HColoredMultigraph, seq: Sequence[str], closed: bool) -> None:
    if len(seq) < 2:
        raise PreconditionFailed("a lift needs at least two vertices", 0)
    checked = set()
    for x in seq:
        if x in checked:
            continue
        checked.add(x)
        cert = multipartite_certificate(auxiliary_graph(graph, x))
        if not cert.ok:
            raise PreconditionFailed(f"G_{x} is not complete multipartite", x)
        if cert.k < 2:
            raise PreconditionFailed(f"G_{x} has only {cert.k} part(s)", x)
    hops = list(zip(seq, seq[1:]))
    if closed:
        hops.append((seq[-1], seq[0]))
    for i, (a, b) in enumerate(hops):
        if a == b or not is_dynamic_edge_set(graph, a, b):
            raise PreconditionFailed(f"E_{a}{b} (hop {i}) is not a dynamic edge set", i)
        if part_distinct_pair(graph, a, b) is None:
            raise PreconditionFailed(f"E_{a}{b} (hop {i}) has no two edges in different parts", i)


def _next_edge(graph: HColoredMultigraph, prev: str, a: str, b: str) -> str:
    """Pick the edge of E_ab following ``prev``: the first of the part-distinct pair that fits."""
    pair = part_distinct_pair(graph, a, b)
    if pair is None:
        raise InternalProofViolation(f"E_{a}{b} has no part-distinct pair")
    for cand in pair:
        if graph.colors_adjacent(prev, cand):
            return cand
    raise InternalProofViolation(f"neither of {pair} in E_{a}{b} follows {prev}")


def greedy_edges(graph: HColoredMultigraph, seq: Sequence[str], first_edge: str) -> list[str]:
    """Single-pass selection of e_0..e_{n-1} along ``seq`` starting with ``first_edge``.

    Only hops after the first need to be dynamic; the first edge is given.
    """
    if graph.edge(first_edge).ends != frozenset(seq[:2]):
        raise PreconditionFailed(f"{first_edge} does not join {seq[0]} and {seq[1]}", 0)
    chosen = [first_edge]
    for a, b in zip(seq[1:], seq[2:]):
        chosen.append(_next_edge(graph, chosen[-1], a, b))
    return chosen


def close_bundle(graph: HColoredMultigraph, last: str, a: str, b: str, first: str) -> tuple[str, ...]:
    """Bundle from ``a`` back to ``b`` after edge ``last``, ending adjacent to ``first``.

    Returns one edge when it already closes, otherwise the edge plus a second
    one from another part of G_b.
    """
    e_n = _next_edge(graph, last, a, b)
    if graph.colors_adjacent(e_n, first):
        return (e_n,)
    for f in graph.bundle(a, b):
        # another part of G_b than e_n; e_n shares a part with ``first``
        if f != e_n and graph.colors_adjacent(f, e_n):
            if not graph.colors_adjacent(f, first):
                raise InternalProofViolation(f"{f} in another part than {e_n} misses {first}")
            return (e_n, f)
    raise InternalProofViolation(f"E_{a}{b} cannot close after {last}")


def _walk(seq: Sequence[str], edges: Sequence[str], closing: tuple[str, ...] | None = None) -> DynamicHWalk:
    steps = [Step(x, (e,)) for x, e in zip(seq, edges)]
    if closing is None:
        return DynamicHWalk(tuple(steps), seq[-1], False)
    steps.append(Step(seq[-1], closing))
    return DynamicHWalk(tuple(steps), seq[0], True)


def lift_walk(graph: HColoredMultigraph, seq: Sequence[str], start_edge: str | None = None) -> DynamicHWalk:
    """H-walk (all singleton bundles) on exactly the vertex sequence ``seq``."""
    seq = list(seq)
    _check_vertices(graph, seq, closed=False)
    first = start_edge or graph.bundle(seq[0], seq[1])[0]
    return _walk(seq, greedy_edges(graph, seq, first))


def lift_closed(graph: HColoredMultigraph, seq: Sequence[str], start_edge: str | None = None) -> DynamicHWalk:
    """Closed dynamic H-walk on the cyclic sequence ``seq`` with at most one change.

    ``seq`` lists x_0..x_n without repeating x_0; E_{x_n x_0} must be dynamic.
    When a change is needed it sits in the final bundle.
    """
    seq = list(seq)
    _check_vertices(graph, seq, closed=True)
    first = start_edge or graph.bundle(seq[0], seq[1])[0]
    edges = greedy_edges(graph, seq, first)
    closing = close_bundle(graph, edges[-1], seq[-1], seq[0], edges[0])
    return _walk(seq, edges, closing)


def lift_path(graph: HColoredMultigraph, path: Sequence[str], start_edge: str | None = None) -> DynamicHWalk:
    if len(set(path)) != len(path):
        raise NotAPath("vertex sequence repeats a vertex", path)
    return lift_walk(graph, path, start_edge)


def lift_cycle(graph: HColoredMultigraph, cycle: Sequence[str], start_edge: str | None = None) -> DynamicHWalk:
    """Lift a cycle of G_dym given as x_0..x_n (x_0 not repeated)."""
    cycle = list(cycle)
    if len(cycle) > 1 and cycle[0] == cycle[-1]:
        cycle = cycle[:-1]
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise NotACycle("a cycle needs at least three distinct vertices", cycle)
    return lift_closed(graph, cycle, start_edge)
