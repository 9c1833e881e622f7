"""Instance generators: the glued complete tightness families and seeded random instances.

Random instances use loopless complete multipartite patterns: colors fall in
classes and two colors are adjacent iff their classes differ. A bundle is then
dynamic exactly when it mixes two classes, so the generator controls G_dym
directly by choosing which bundles mix classes.
"""

from __future__ import annotations

import random
from itertools import combinations

from .errors import BadParameters, GenerationFailed
from .model import HColoredMultigraph, PatternGraph, build_graph
from .structure import (
    DIRAC_DYNAMIC,
    DIRAC_H,
    EULER,
    LONG_CYCLE,
    ORE_DYNAMIC,
    ORE_H,
    PATH_OR_CYCLE,
    hypothesis_report,
)

MAX_TRIES = 200


def gen_glued_complete(n: int, m: int, pattern: PatternGraph | None = None) -> HColoredMultigraph:
    """Two copies of K_n^m sharing vertex v0; each pair gets m edges of distinct colors."""
    if n < 3 or m not in (2, 3):
        raise BadParameters(f"need n >= 3 and m in {{2, 3}}, got n={n}, m={m}")
    if pattern is None:
        pattern = PatternGraph.complete(range(1, m + 1))
    if not pattern.is_complete_loopless() or len(pattern.colors) < m:
        raise BadParameters(f"pattern must be complete, loopless, with at least {m} colors")
    colors = sorted(pattern.colors)
    blocks = [
        [f"v{i}" for i in range(n)],
        ["v0"] + [f"v{i}" for i in range(n, 2 * n - 1)],
    ]
    edges = []
    t = 0
    for block in blocks:
        for a, b in combinations(block, 2):
            for s in range(m):
                edges.append((f"e{len(edges) + 1}", a, b, colors[(t + s) % len(colors)]))
            t += 1
    return build_graph([f"v{i}" for i in range(2 * n - 1)], edges, pattern)


# ---------------------------------------------------------------------------
# random instances

PROFILES = (LONG_CYCLE, PATH_OR_CYCLE, EULER, ORE_DYNAMIC, ORE_H, DIRAC_DYNAMIC, DIRAC_H)


def parse_profile(profile: str) -> tuple[str, int | None]:
    """``"long-cycle:3"`` -> ``("long-cycle", 3)``; profiles without a parameter give None."""
    name, _, arg = profile.partition(":")
    if name not in PROFILES:
        raise BadParameters(f"unknown profile {profile!r}; choose from {', '.join(PROFILES)}")
    if name in (LONG_CYCLE, PATH_OR_CYCLE):
        d = int(arg) if arg else 2
        if d < 2:
            raise BadParameters("d must be at least 2")
        return name, d
    if arg:
        raise BadParameters(f"profile {name} takes no parameter")
    return name, None


def _adjacency(n: int, edges) -> list[set[int]]:
    adj = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def _random_simple(rng: random.Random, n: int) -> list[set[int]]:
    p = rng.uniform(0.15, 0.7)
    return _adjacency(n, [(a, b) for a, b in combinations(range(n), 2) if rng.random() < p])


def _raise_min_degree(rng, adj, bound) -> None:
    n = len(adj)
    while True:
        low = [v for v in range(n) if len(adj[v]) < bound]
        if not low:
            return
        v = rng.choice(low)
        options = [w for w in range(n) if w != v and w not in adj[v]]
        # prefer partners that are also short of neighbors
        poor = [w for w in options if len(adj[w]) < bound]
        w = rng.choice(poor or options)
        adj[v].add(w)
        adj[w].add(v)


def _raise_ore(rng, adj, bound) -> None:
    n = len(adj)
    while True:
        bad = [
            (a, b)
            for a, b in combinations(range(n), 2)
            if b not in adj[a] and len(adj[a]) + len(adj[b]) < bound
        ]
        if not bad:
            return
        a, b = rng.choice(bad)
        adj[a].add(b)
        adj[b].add(a)


def _random_eulerian(rng, n) -> list[set[int]]:
    order = list(range(n))
    rng.shuffle(order)
    edges = {frozenset((order[i], order[(i + 1) % n])) for i in range(n)}
    for _ in range(rng.randint(0, n)):
        size = rng.randint(3, n)
        cyc = rng.sample(range(n), size)
        for i in range(size):
            edges ^= {frozenset((cyc[i], cyc[(i + 1) % size]))}
    return _adjacency(n, [tuple(e) for e in edges])


def _target_graph(rng, n, name, d) -> list[set[int]]:
    if name in (LONG_CYCLE, PATH_OR_CYCLE):
        adj = _random_simple(rng, n)
        _raise_min_degree(rng, adj, d)
    elif name == EULER:
        adj = _random_eulerian(rng, n)
    elif name == ORE_DYNAMIC:
        adj = _random_simple(rng, n)
        _raise_ore(rng, adj, n)
    elif name == ORE_H:
        adj = _random_simple(rng, n)
        _raise_ore(rng, adj, n + 1)
    elif name == DIRAC_DYNAMIC:
        adj = _random_simple(rng, n)
        _raise_min_degree(rng, adj, (n + 1) // 2)
    else:
        adj = _random_simple(rng, n)
        _raise_min_degree(rng, adj, (n + 2) // 2)
    return adj


def _random_pattern(rng, classes: int) -> tuple[PatternGraph, list[list[str]]]:
    groups, idx = [], 1
    for _ in range(classes):
        size = rng.choice((1, 1, 2))
        groups.append([f"c{idx + i}" for i in range(size)])
        idx += size
    return PatternGraph.complete_multipartite(groups), groups


def _instance(rng, n, name, d) -> HColoredMultigraph:
    need_all3 = name == PATH_OR_CYCLE
    need_some3 = name in (ORE_H, DIRAC_H)
    adj = _target_graph(rng, n, name, d)
    # "poor" instances keep dynamic bundles on two classes so a third class only
    # shows up on extra edges; this exercises the two-part branches
    poor = rng.random() < 0.5
    classes = 3 if (poor or need_all3 or need_some3) and rng.random() < 0.7 else rng.randint(2, 4)
    if need_all3 or need_some3:
        classes = max(classes, 3)
    pattern, groups = _random_pattern(rng, classes)
    mixing = groups[:2] if poor else groups

    bundles: dict[tuple[int, int], list[str]] = {}
    for a, b in combinations(range(n), 2):
        if b in adj[a]:
            width = rng.choice((2, 2, 3))
            ca, cb = rng.sample(range(len(mixing)), 2)
            cols = [rng.choice(mixing[ca]), rng.choice(mixing[cb])]
            while len(cols) < width:
                cols.append(rng.choice(rng.choice(mixing)))
            bundles[(a, b)] = cols
        elif rng.random() < 0.3:
            group = rng.choice(groups)
            bundles[(a, b)] = [rng.choice(group) for _ in range(rng.choice((1, 1, 2)))]

    def classes_at(v: int) -> set[int]:
        return {
            i
            for (a, b), cols in bundles.items()
            if v in (a, b)
            for c in cols
            for i, g in enumerate(groups)
            if c in g
        }

    def give_class(v: int, i: int) -> None:
        # a fresh single edge on an empty pair, else one more lane on a dynamic bundle
        empty = [w for w in range(n) if w != v and (min(v, w), max(v, w)) not in bundles]
        if empty:
            w = rng.choice(empty)
            bundles[(min(v, w), max(v, w))] = [rng.choice(groups[i])]
            return
        wide = [w for w in adj[v] if len(bundles[(min(v, w), max(v, w))]) < 4]
        if wide:
            w = rng.choice(wide)
            bundles[(min(v, w), max(v, w))].append(rng.choice(groups[i]))

    if need_all3 or (need_some3 and poor):
        targets = range(n) if need_all3 else [rng.randrange(n)]
        for v in targets:
            missing = [i for i in range(len(groups)) if i not in classes_at(v)]
            rng.shuffle(missing)
            for i in missing[: max(0, 3 - len(classes_at(v)))]:
                give_class(v, i)

    edges = []
    for (a, b), cols in sorted(bundles.items()):
        for c in cols:
            edges.append((f"e{len(edges) + 1}", f"v{a}", f"v{b}", c))
    return build_graph([f"v{i}" for i in range(n)], edges, pattern)


def gen_random(n: int, seed: int, profile: str) -> HColoredMultigraph:
    """Seeded instance satisfying the premises of ``profile``.

    The premises are confirmed with :func:`hypothesis_report`; after
    ``MAX_TRIES`` rejected candidates :class:`GenerationFailed` is raised.
    """
    name, d = parse_profile(profile)
    minimum = (d + 1) if d is not None else 3
    if n < minimum:
        raise GenerationFailed(f"profile {profile} needs at least {minimum} vertices, got {n}")
    rng = random.Random(f"{profile}/{n}/{seed}")
    for _ in range(MAX_TRIES):
        graph = _instance(rng, n, name, d)
        report = hypothesis_report(graph)
        if name in report.applicable and (d is None or report.min_dynamic_degree >= d):
            return graph
    raise GenerationFailed(f"no {profile} instance on {n} vertices after {MAX_TRIES} tries")
