from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dynwalk import oracle
from dynwalk.errors import BadParameters, BoundsExceeded
from dynwalk.fixtures import sample_graph, sample_cycle
from dynwalk.generators import gen_glued_complete
from dynwalk.model import PatternGraph, build_graph
from dynwalk.oracle import OracleQuery, oracle_solve


# -- naive enumeration: every ordered bundle of distinct edges, no canonicalization ----


def naive_closed_trails(graph):
    """Yield (vertex sequence, changes) for every closed dynamic H-trail."""
    adj = graph.colors_adjacent
    out = []

    def bundles(v, w, used):
        free = [e for e in graph.bundle(v, w) if e not in used]
        for k in range(1, len(free) + 1):
            yield from permutations(free, k)

    def walk(start, v, seq, first, last, used, changes):
        for w in graph.neighbors(v):
            for b in bundles(v, w, used):
                if last is not None and not adj(last, b[0]):
                    continue
                f = first if first is not None else b[0]
                ch = changes + len(b) - 1
                now = used | set(b)
                if w == start and adj(b[-1], f):
                    out.append((seq + [w], ch))
                walk(start, w, seq + [w], f, b[-1], now, ch)

    for s in graph.vertices:
        walk(s, s, [s], None, None, frozenset(), 0)
    return out


def naive_answers(graph):
    trails = naive_closed_trails(graph)
    cycles = [(seq, ch) for seq, ch in trails if len(seq) >= 3 and len(set(seq[:-1])) == len(seq) - 1]
    dyn = max((len(s) - 1 for s, _ in cycles), default=0)
    h = max((len(s) - 1 for s, ch in cycles if ch == 0), default=0)
    spanning = any(set(s) == set(graph.vertices) for s, _ in trails)
    return dyn, h, spanning, cycles


def naive_longest_h_path(graph):
    best = 0

    def walk(v, seen, last):
        nonlocal best
        best = max(best, len(seen) - 1)
        for w in graph.neighbors(v):
            if w in seen:
                continue
            for e in graph.bundle(v, w):
                if last is None or graph.colors_adjacent(last, e):
                    walk(w, seen | {w}, e)

    for s in graph.vertices:
        walk(s, {s}, None)
    return best


@st.composite
def tiny_graphs(draw):
    colors = ["a", "b", "c"]
    pairs = [(x, y) for i, x in enumerate(colors) for y in colors[i:]]
    pattern = PatternGraph.from_edges(colors, draw(st.lists(st.sampled_from(pairs), unique=True)))
    n = draw(st.integers(1, 4))
    verts = [f"v{i}" for i in range(n)]
    vpairs = [(verts[i], verts[j]) for i in range(n) for j in range(i + 1, n)]
    edges = []
    budget = 7
    for u, v in vpairs:
        for _ in range(draw(st.integers(0, min(3, budget)))):
            edges.append((f"e{len(edges) + 1}", u, v, draw(st.sampled_from(colors))))
            budget -= 1
    return build_graph(verts, edges, pattern)


@settings(max_examples=150, deadline=None)
@given(tiny_graphs())
def test_oracle_matches_naive_enumeration(g):
    dyn, h, spanning, cycles = naive_answers(g)
    two = [frozenset(s) for s, _ in naive_closed_trails(g) if len(s) == 3 and s[0] == s[2]]
    if two:
        dyn, h2 = max(dyn, 2), any(
            ch == 0 for s, ch in naive_closed_trails(g) if len(s) == 3 and s[0] == s[2]
        )
        if h2:
            h = max(h, 2)
    assert oracle.longest_cycle(g, dynamic=True) == dyn
    assert oracle.longest_cycle(g, dynamic=False) == h
    assert oracle.has_spanning_closed_dynamic_trail(g) == (spanning and g.n >= 2)
    assert oracle.longest_h_path(g) == naive_longest_h_path(g)
    ham = any(len(s) - 1 == g.n for s, _ in cycles)
    assert oracle.has_hamiltonian_cycle(g, dynamic=True) == (ham or (g.n == 2 and dyn >= 2))


# -- worked instances ---------------------------------------------------------------


@pytest.mark.parametrize("v", ["v5", "v6", "v7"])
def test_sample_no_long_h_cycle_through(v):
    assert not oracle.exists_h_cycle_through(sample_graph(), v, 3)
    assert oracle_solve(sample_graph(), OracleQuery("h-cycle-through", vertex=v, min_len=3)) is False


def test_sample_short_h_cycles_exist():
    assert oracle.exists_h_cycle_through(sample_graph(), "v5", 2)


def test_sample_enumeration_finds_p():
    found = oracle.enumerate_dynamic_cycles(sample_graph(), 4, through="v5")
    assert sample_cycle() in found
    for w in found:
        assert w.vertices[0] == min(w.vertices, key=lambda x: int(x[1:]))


def test_enumeration_is_deterministic():
    a = oracle_solve(sample_graph(), OracleQuery("enumerate-dynamic-h-cycles", max_len=5))
    b = oracle_solve(sample_graph(), OracleQuery("enumerate-dynamic-h-cycles", max_len=5))
    assert a == b and a


def test_minimal_bundles_filter():
    full = oracle.enumerate_dynamic_cycles(sample_graph(), 4, through="v5", minimal_bundles=False)
    minimal = oracle.enumerate_dynamic_cycles(sample_graph(), 4, through="v5")
    assert set(minimal) <= set(full) and len(full) > len(minimal)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_glued_longest_dynamic_cycle(n):
    assert oracle_solve(gen_glued_complete(n, 2), OracleQuery("longest-dynamic-h-cycle")) == n


def test_single_vertex():
    g = build_graph(["x"], [], PatternGraph.complete("ab"))
    assert not oracle.has_hamiltonian_cycle(g, dynamic=True)
    assert not oracle.has_hamiltonian_cycle(g, dynamic=False)
    assert not oracle.has_spanning_closed_dynamic_trail(g)
    assert not oracle.exists_h_cycle_through(g, "x", 2)
    assert oracle.longest_cycle(g, dynamic=True) == 0


def test_adding_parallel_edge_is_monotone():
    g = sample_graph()
    before = oracle.longest_cycle(g, dynamic=False)
    extra = [(e.id, e.u, e.v, e.color) for e in g.edges] + [("e17", "v5", "v6", "G")]
    bigger = build_graph(g.vertices, extra, g.pattern)
    assert oracle.longest_cycle(bigger, dynamic=False) >= before
    assert oracle.longest_cycle(bigger, dynamic=True) >= oracle.longest_cycle(g, dynamic=True)


def test_bounds():
    big = gen_glued_complete(6, 2)
    with pytest.raises(BoundsExceeded):
        oracle.longest_cycle(big, dynamic=True)
    wide = build_graph(["a", "b"], [(f"e{i}", "a", "b", "a") for i in range(5)], PatternGraph.complete("a", loops=True))
    with pytest.raises(BoundsExceeded):
        oracle.longest_cycle(wide, dynamic=True)


def test_env_cap(monkeypatch):
    monkeypatch.setenv("DYNWALK_ORACLE_MAX_N", "5")
    with pytest.raises(BoundsExceeded):
        oracle.longest_cycle(sample_graph(), dynamic=True)
    monkeypatch.setenv("DYNWALK_ORACLE_MAX_N", "12")
    assert oracle.longest_cycle(gen_glued_complete(6, 2), dynamic=True) == 6


def test_unknown_target():
    with pytest.raises(BadParameters):
        oracle_solve(sample_graph(), OracleQuery("nope"))
