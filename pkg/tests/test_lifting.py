import random

import pytest

from dynwalk.errors import NotACycle, NotAPath, PreconditionFailed
from dynwalk.fixtures import doubled_cycle, doubled_triangle, sample_graph
from dynwalk.generators import gen_random
from dynwalk.lifting import lift_closed, lift_cycle, lift_path, lift_walk
from dynwalk.model import DynamicHWalk, verify_walk
from dynwalk.structure import dynamic_graph


def test_lift_walk_sample_graph():
    w = lift_walk(sample_graph(), ["v1", "v4", "v3"], "e3")
    assert w == DynamicHWalk.of([("v1", ["e3"]), ("v4", ["e8"])], "v3")


def test_lift_single_hop():
    w = lift_walk(sample_graph(), ["v1", "v4"])
    assert w == DynamicHWalk.of([("v1", ["e3"])], "v4")


def test_lift_walk_alternates_on_k2():
    g = doubled_triangle()
    w = lift_walk(g, ["v1", "v2", "v3"], "e1")
    colors = [g.color(e) for e in w.edge_ids]
    assert colors == ["1", "2"]


def test_lift_closed_odd_cycle_needs_a_change():
    g = doubled_triangle()
    w = lift_closed(g, ["v1", "v2", "v3"])
    c = verify_walk(g, w)
    assert c.is_cycle and c.changes == 1
    assert len(w.steps[-1].bundle) == 2


def test_lift_closed_even_cycle_alternates():
    g = doubled_cycle(4)
    w = lift_closed(g, ["v1", "v2", "v3", "v4"])
    c = verify_walk(g, w)
    assert c.is_cycle and c.is_h_walk


def test_lift_closed_two_vertices():
    g = sample_graph()
    w = lift_closed(g, ["v4", "v7"])
    assert w == DynamicHWalk.of([("v4", ["e11"]), ("v7", ["e12"])], "v4", closed=True)
    c = verify_walk(g, w)
    assert c.is_cycle and c.changes == 0


def test_lift_path_sample_graph():
    g = sample_graph()
    c = verify_walk(g, lift_path(g, ["v2", "v3", "v4", "v7"]))
    assert c.is_path and c.is_h_walk and c.length == 3


def test_lift_cycle_examples():
    assert verify_walk(doubled_triangle(), lift_cycle(doubled_triangle(), ["v1", "v2", "v3"])).changes == 1
    c = verify_walk(doubled_cycle(4), lift_cycle(doubled_cycle(4), ["v1", "v2", "v3", "v4", "v1"]))
    assert c.is_cycle and c.changes == 0


def test_preconditions():
    g = sample_graph()
    with pytest.raises(PreconditionFailed) as exc:
        lift_walk(g, ["v1", "v2"])
    assert exc.value.witness == 0
    with pytest.raises(PreconditionFailed) as exc:
        lift_walk(g, ["v1", "v4", "v5"])
    assert exc.value.witness == 1
    with pytest.raises(NotAPath):
        lift_path(g, ["v1", "v4", "v1"])
    with pytest.raises(NotACycle):
        lift_cycle(g, ["v4", "v7"])


def random_dym_walk(rng, dym, length, simple):
    here = rng.choice(dym.nodes)
    seq = [here]
    for _ in range(length):
        options = [w for w in dym.neighbors(here) if not simple or w not in seq]
        if not options:
            break
        here = rng.choice(options)
        seq.append(here)
    return seq


@pytest.mark.parametrize("profile", ["long-cycle:2", "euler", "ham-dyn", "dirac-h"])
def test_lift_properties(profile):
    rng = random.Random(profile)
    for seed in range(25):
        g = gen_random(rng.randint(3, 8), seed, profile)
        dym = dynamic_graph(g)
        seq = random_dym_walk(rng, dym, rng.randint(1, 8), simple=False)
        if len(seq) >= 2:
            w = lift_walk(g, seq)
            c = verify_walk(g, w)
            assert c.is_h_walk and w.vertices == tuple(seq)
        path = random_dym_walk(rng, dym, g.n, simple=True)
        if len(path) >= 3 and dym.has_edge(path[0], path[-1]):
            w = lift_cycle(g, path)
            c = verify_walk(g, w)
            assert c.is_cycle and c.changes <= 1 and w.vertices[:-1] == tuple(path)
