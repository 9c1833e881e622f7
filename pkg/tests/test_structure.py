from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dynwalk.errors import NotMultipartite, SameVertex, UnknownVertex
from dynwalk.fixtures import sample_graph, multiplied_complete, part_sharing_bundle
from dynwalk.generators import gen_glued_complete, gen_random
from dynwalk.model import PatternGraph, build_graph
from dynwalk.structure import (
    EULER,
    LONG_CYCLE,
    auxiliary_graph,
    dynamic_degree,
    dynamic_graph,
    hypothesis_report,
    is_dynamic_edge_set,
    multipartite_certificate,
    observation1_check,
)


# -- independent recomputation from raw pattern data --------------------------------


def raw_nbhd(graph, color):
    out = set()
    for pair in graph.pattern.adjacency:
        pair = tuple(pair)
        if len(pair) == 1 and pair[0] == color:
            out.add(color)
        elif color in pair:
            out.update(c for c in pair if c != color)
    return out


def raw_dynamic(graph, u, v):
    ids = [e.id for e in graph.edges if {e.u, e.v} == {u, v}]
    for a, b in combinations(ids, 2):
        na, nb = raw_nbhd(graph, graph.color(a)), raw_nbhd(graph, graph.color(b))
        if not na <= nb and not nb <= na:
            return True
    return False


def raw_adjacent(graph, a, b):
    return graph.color(b) in raw_nbhd(graph, graph.color(a))


def raw_is_multipartite(graph, u):
    ids = [e.id for e in graph.edges if u in (e.u, e.v)]
    for a, b, c in combinations(ids, 3):
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            # y non-adjacent to both x and z forces x, z non-adjacent
            if not raw_adjacent(graph, x, y) and not raw_adjacent(graph, y, z) and raw_adjacent(graph, x, z):
                return False
    return True


# -- examples -----------------------------------------------------------------------


def test_auxiliary_graph_v4():
    aux = auxiliary_graph(sample_graph(), "v4")
    assert aux.nodes == ("e3", "e4", "e7", "e8", "e9", "e10", "e11", "e12")
    assert aux.adjacent("e3", "e4")
    assert not aux.adjacent("e9", "e10")


def test_auxiliary_graph_small_cases():
    g = build_graph(["a", "b", "c"], [("e1", "a", "b", "B")], sample_graph().pattern)
    assert auxiliary_graph(g, "c").nodes == ()
    aux = auxiliary_graph(g, "a")
    assert aux.nodes == ("e1",) and not aux.adjacency
    with pytest.raises(UnknownVertex):
        auxiliary_graph(g, "zz")


def test_certificate_v4():
    cert = multipartite_certificate(auxiliary_graph(sample_graph(), "v4"))
    assert cert.parts == (("e3", "e7", "e9", "e10", "e11"), ("e4", "e8", "e12"))
    assert cert.k == 2


def test_certificate_witness():
    pattern = PatternGraph.from_edges("abc", [("a", "b")])
    g = build_graph(["u", "x", "y", "z"], [("ea", "u", "x", "a"), ("eb", "u", "y", "b"), ("ec", "u", "z", "c")], pattern)
    cert = multipartite_certificate(auxiliary_graph(g, "u"))
    assert not cert.ok and cert.witness == ("ea", "ec", "eb")


def test_certificate_empty():
    g = build_graph(["a"], [], sample_graph().pattern)
    cert = multipartite_certificate(auxiliary_graph(g, "a"))
    assert cert.parts == () and cert.k == 0


def test_dynamic_edge_sets_sample_graph():
    g = sample_graph()
    check = is_dynamic_edge_set(g, "v1", "v4")
    assert check and check.witness == ("e3", "e4")
    assert not is_dynamic_edge_set(g, "v1", "v2")
    assert not is_dynamic_edge_set(g, "v4", "v5")
    with pytest.raises(SameVertex):
        is_dynamic_edge_set(g, "v1", "v1")
    with pytest.raises(UnknownVertex):
        is_dynamic_edge_set(g, "v1", "v0")


def test_dynamic_degrees_sample_graph():
    g = sample_graph()
    assert dynamic_degree(g, "v4") == 3
    assert dynamic_degree(g, "v1") == 1
    iso = build_graph(["a"], [], g.pattern)
    assert dynamic_degree(iso, "a") == 0


def test_dynamic_graph_sample_graph():
    assert dynamic_graph(sample_graph()).edges() == [("v1", "v4"), ("v2", "v3"), ("v3", "v4"), ("v4", "v7"), ("v5", "v6")]


def test_dynamic_graph_without_parallel_edges_is_empty():
    g = build_graph(["a", "b", "c"], [("e1", "a", "b", "B"), ("e2", "b", "c", "R")], sample_graph().pattern)
    assert dynamic_graph(g).edges() == []


def test_dynamic_graph_glued():
    g = gen_glued_complete(4, 2)
    dym = dynamic_graph(g)
    block1 = ["v0", "v1", "v2", "v3"]
    block2 = ["v0", "v4", "v5", "v6"]
    expected = {frozenset(p) for b in (block1, block2) for p in combinations(b, 2)}
    assert {frozenset(e) for e in dym.edges()} == expected
    assert dym.degree("v0") == 6 and dym.degree("v5") == 3


def test_part_split_examples():
    g = sample_graph()
    assert observation1_check(g, "v1", "v4")
    assert not observation1_check(g, "v4", "v5")
    assert not observation1_check(g, "v1", "v2")
    single = build_graph(["a", "b"], [("e1", "a", "b", "B")], g.pattern)
    assert not observation1_check(single, "a", "b")


def test_part_split_needs_certificate():
    pattern = PatternGraph.from_edges("abc", [("a", "b")])
    g = build_graph(["u", "x"], [("ea", "u", "x", "a"), ("eb", "u", "x", "b"), ("ec", "u", "x", "c")], pattern)
    with pytest.raises(NotMultipartite):
        observation1_check(g, "u", "x")


def test_part_split_fails_for_general_patterns():
    # a dynamic bundle whose two edges share a part: the equivalence needs more than multipartiteness
    g = part_sharing_bundle()
    assert multipartite_certificate(auxiliary_graph(g, "u")).ok
    assert is_dynamic_edge_set(g, "u", "v")
    assert not observation1_check(g, "u", "v")
    report = hypothesis_report(g)
    assert not report.parts_consistent
    assert report.parts_counterexample == ("u", "v")
    assert report.applicable == ()


def test_report_sample_graph():
    r = hypothesis_report(sample_graph())
    assert all(v.k == 2 for v in r.vertices)
    # every vertex lies on at least one dynamic bundle
    assert r.min_dynamic_degree == 1
    assert not r.dym_connected
    assert r.applicable == ()


def test_report_glued():
    r = hypothesis_report(gen_glued_complete(4, 2))
    assert LONG_CYCLE in r.applicable and r.max_cycle_d == 3


def test_report_empty():
    r = hypothesis_report(build_graph([], [], PatternGraph.complete("ab")))
    assert r.n == 0 and r.applicable == ()


def test_edge_colored_parts_are_color_classes():
    g = multiplied_complete(4, 3)
    for u in g.vertices:
        cert = multipartite_certificate(auxiliary_graph(g, u))
        colors = [{g.color(e) for e in part} for part in cert.parts]
        assert all(len(c) == 1 for c in colors)
        assert cert.k == len({g.color(e) for e in g.incident(u)})


# -- properties over generated instances --------------------------------------------


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 7), st.integers(0, 10_000), st.sampled_from(["long-cycle:2", "euler", "ham-h", "dirac-dyn"]))
def test_structure_matches_recomputation(n, seed, profile):
    g = gen_random(n, seed, profile)
    dym = dynamic_graph(g)
    for u in g.vertices:
        assert multipartite_certificate(auxiliary_graph(g, u)).ok == raw_is_multipartite(g, u)
        assert dynamic_degree(g, u) == dym.degree(u)
    for u, v in combinations(g.vertices, 2):
        d = bool(is_dynamic_edge_set(g, u, v))
        assert d == raw_dynamic(g, u, v) == bool(is_dynamic_edge_set(g, v, u))
        assert d == observation1_check(g, u, v)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_certificate_on_random_patterns(data):
    # arbitrary patterns with loops: parts must be independent and fully joined, witnesses genuine
    colors = ["a", "b", "c", "d"]
    pairs = [(x, y) for i, x in enumerate(colors) for y in colors[i:]]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True))
    pattern = PatternGraph.from_edges(colors, chosen)
    k = data.draw(st.integers(0, 6))
    edge_colors = data.draw(st.lists(st.sampled_from(colors), min_size=k, max_size=k))
    verts = ["u"] + [f"x{i}" for i in range(k)]
    g = build_graph(verts, [(f"e{i}", "u", f"x{i}", c) for i, c in enumerate(edge_colors)], pattern)
    aux = auxiliary_graph(g, "u")
    cert = multipartite_certificate(aux)
    assert cert.ok == raw_is_multipartite(g, "u")
    if cert.ok:
        for p in cert.parts:
            assert all(not aux.adjacent(a, b) for a, b in combinations(p, 2))
        for p, q in combinations(cert.parts, 2):
            assert all(aux.adjacent(a, b) for a in p for b in q)
        assert sorted(e for p in cert.parts for e in p) == sorted(aux.nodes)
    else:
        a, b, c = cert.witness
        assert not aux.adjacent(a, b) and not aux.adjacent(b, c) and aux.adjacent(a, c)


def test_report_fields_match_recomputation():
    for seed in range(20):
        g = gen_random(6, seed, "euler")
        r = hypothesis_report(g)
        dym = dynamic_graph(g)
        assert EULER in r.applicable
        assert r.dym_connected and r.all_dynamic_degrees_even
        assert r.min_dynamic_degree == min(dym.degree(v) for v in g.vertices)
        assert set(map(frozenset, r.dynamic_edges)) == {
            frozenset((u, v)) for u, v in combinations(g.vertices, 2) if raw_dynamic(g, u, v)
        }
