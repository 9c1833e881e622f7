"""Small named instances used by the tests, the examples and the CLI."""

from __future__ import annotations

from itertools import combinations

from .model import DynamicHWalk, HColoredMultigraph, PatternGraph, build_graph

SAMPLE_EDGES = [
    ("e1", "v1", "v2", "B"),
    ("e2", "v1", "v2", "G"),
    ("e3", "v1", "v4", "B"),
    ("e4", "v1", "v4", "R"),
    ("e5", "v2", "v3", "G"),
    ("e6", "v2", "v3", "R"),
    ("e7", "v3", "v4", "B"),
    ("e8", "v3", "v4", "R"),
    ("e9", "v4", "v5", "B"),
    ("e10", "v4", "v5", "B"),
    ("e11", "v4", "v7", "G"),
    ("e12", "v4", "v7", "R"),
    ("e13", "v5", "v6", "B"),
    ("e14", "v5", "v6", "R"),
    ("e15", "v6", "v7", "R"),
    ("e16", "v6", "v7", "R"),
]


def sample_pattern() -> PatternGraph:
    return PatternGraph.from_edges("BRG", [("B", "R"), ("G", "R")])


def sample_graph() -> HColoredMultigraph:
    """Seven vertices, sixteen edges over the path pattern B - R - G."""
    return build_graph([f"v{i}" for i in range(1, 8)], SAMPLE_EDGES, sample_pattern())


def sample_cycle() -> DynamicHWalk:
    return DynamicHWalk.of(
        [("v4", ["e9"]), ("v5", ["e14", "e13"]), ("v6", ["e16"]), ("v7", ["e11", "e12"])], "v4", closed=True
    )


def sample_trail() -> DynamicHWalk:
    return DynamicHWalk.of(
        [("v1", ["e4"]), ("v4", ["e10"]), ("v5", ["e14", "e13"]), ("v6", ["e15"])], "v7"
    )


def sample_broken_cycle() -> DynamicHWalk:
    return DynamicHWalk.of(
        [("v4", ["e9"]), ("v5", ["e14", "e13"]), ("v6", ["e15"]), ("v7", ["e11"])], "v4", closed=True
    )


def multiplied(pairs, m: int, colors=None, vertices=None) -> HColoredMultigraph:
    """Every listed pair joined by ``m`` edges of distinct colors on a complete loopless pattern."""
    colors = [str(c) for c in (colors or range(1, m + 1))]
    pattern = PatternGraph.complete(colors)
    edges = []
    for a, b in pairs:
        for s in range(m):
            edges.append((f"e{len(edges) + 1}", a, b, colors[s % len(colors)]))
    if vertices is None:
        vertices = sorted({x for p in pairs for x in p}, key=lambda v: int(v[1:]))
    return build_graph(vertices, edges, pattern)


def _names(n: int) -> list[str]:
    return [f"v{i}" for i in range(1, n + 1)]


def multiplied_complete(n: int, m: int) -> HColoredMultigraph:
    """K_n with every pair carrying m edges colored 1..m; pattern complete loopless on m colors."""
    verts = _names(n)
    return multiplied(list(combinations(verts, 2)), m, vertices=verts)


def doubled_triangle() -> HColoredMultigraph:
    return multiplied_complete(3, 2)


def doubled_cycle(n: int) -> HColoredMultigraph:
    verts = _names(n)
    return multiplied([(verts[i], verts[(i + 1) % n]) for i in range(n)], 2, vertices=verts)


def doubled_path(n: int) -> HColoredMultigraph:
    verts = _names(n)
    return multiplied(list(zip(verts, verts[1:])), 2, vertices=verts)


def bowtie() -> HColoredMultigraph:
    """Two doubled triangles sharing v3."""
    pairs = [("v1", "v2"), ("v1", "v3"), ("v2", "v3"), ("v3", "v4"), ("v3", "v5"), ("v4", "v5")]
    return multiplied(pairs, 2, vertices=_names(5))


def part_sharing_bundle() -> HColoredMultigraph:
    """A dynamic bundle whose two edges share a part of G_u.

    Colors a and b have incomparable neighborhoods {x, z} and {y, z}, yet are not
    adjacent, so G_u is complete bipartite with both bundle edges in one part.
    """
    pattern = PatternGraph.from_edges("abxyz", [("a", "x"), ("b", "y"), ("z", "a"), ("z", "b")])
    edges = [("e1", "u", "v", "a"), ("e2", "u", "v", "b"), ("e3", "u", "w", "z")]
    return build_graph(["u", "v", "w"], edges, pattern)
