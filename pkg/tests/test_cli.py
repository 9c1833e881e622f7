import json

import pytest

from dynwalk.cli import main
from dynwalk.fixtures import sample_cycle, sample_broken_cycle
from dynwalk.io import load_graph, load_walk, walk_to_dict, dump_json
from dynwalk.model import verify_walk


@pytest.fixture
def sample_file(tmp_path):
    path = tmp_path / "sample.json"
    assert main(["gen", "sample", "-o", str(path)]) == 0
    return path


def write_walk(tmp_path, walk, name="w.json"):
    path = tmp_path / name
    path.write_text(dump_json(walk_to_dict(walk)))
    return path


def test_check_sample_graph(sample_file, capsys):
    assert main(["check", str(sample_file)]) == 0
    out = capsys.readouterr().out
    assert "dynamic edges: v1v4, v2v3, v3v4, v4v7, v5v6" in out
    assert "applicable: none" in out


def test_check_json(sample_file, capsys):
    assert main(["check", str(sample_file), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["applicable"] == []


def test_verify_p_and_rejection(sample_file, tmp_path, capsys):
    assert main(["verify", str(sample_file), str(write_walk(tmp_path, sample_cycle()))]) == 0
    assert "dynamic H-cycle, length 4, changes 2" in capsys.readouterr().out
    bad = write_walk(tmp_path, sample_broken_cycle(), "bad.json")
    assert main(["verify", str(sample_file), str(bad)]) == 1


def test_verify_json(sample_file, tmp_path, capsys):
    assert main(["verify", str(sample_file), str(write_walk(tmp_path, sample_cycle())), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["is_cycle"] and data["length"] == 4 and data["changes"] == 2


def test_verify_empty_walk_file(sample_file, tmp_path):
    empty = tmp_path / "empty.json"
    empty.write_text("")
    assert main(["verify", str(sample_file), str(empty)]) == 2


def test_find_unmet_premise(sample_file, capsys):
    assert main(["find", str(sample_file), "--goal", "euler"]) == 3
    assert "error" in capsys.readouterr().err


def test_find_needs_d(sample_file):
    assert main(["find", str(sample_file), "--goal", "long-cycle"]) == 2


def test_oracle_sample_graph(sample_file, capsys):
    assert main(["oracle", str(sample_file), "--target", "no-h-cycle-through", "v5", "--min-len", "3"]) == 0
    assert capsys.readouterr().out.strip() == "true"
    assert main(["oracle", str(sample_file), "--target", "enumerate", "--vertex", "v5", "--max-len", "4", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert walk_to_dict(sample_cycle()) in data["answer"]


def test_oracle_unknown_target(sample_file):
    assert main(["oracle", str(sample_file), "--target", "bogus"]) == 2


def test_glued_roundtrip(tmp_path, capsys):
    g = tmp_path / "g.json"
    assert main(["gen", "glued-k2", "4", "-o", str(g)]) == 0
    assert main(["oracle", str(g), "--target", "longest-dyn-cycle"]) == 0
    assert capsys.readouterr().out.strip() == "4"
    assert main(["check", str(g)]) == 0
    assert "long-cycle applies with d = 3" in capsys.readouterr().out
    w = tmp_path / "w.json"
    assert main(["find", str(g), "--goal", "long-cycle", "-d", "3", "-o", str(w)]) == 0
    c = verify_walk(load_graph(g).graph, load_walk(w))
    assert c.is_cycle and c.length >= 4
    assert main(["verify", str(g), str(w)]) == 0


def test_gen_failures(tmp_path):
    assert main(["gen", "glued-k2", "2"]) == 3
    assert main(["gen", "glued-k2", "x"]) == 2
    assert main(["gen", "random", "bogus", "5", "1"]) == 2
    big = tmp_path / "big.json"
    assert main(["gen", "glued-k2", "6", "-o", str(big)]) == 0
    assert main(["oracle", str(big), "--target", "longest-dyn-cycle"]) == 3


def test_pc_k4(tmp_path, capsys):
    k4 = tmp_path / "k4.json"
    w = tmp_path / "w.json"
    assert main(["gen", "pc-k4", "-o", str(k4)]) == 0
    assert main(["find", str(k4), "--goal", "pc-ham", "-o", str(w)]) == 0
    capsys.readouterr()
    assert main(["verify", str(k4), str(w)]) == 0
    assert "H-cycle, length 4, changes 0" in capsys.readouterr().out


def test_random_is_deterministic(tmp_path, capsys):
    assert main(["gen", "random", "euler", "8", "1"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "random", "euler", "8", "1"]) == 0
    assert capsys.readouterr().out == first
    path = tmp_path / "r.json"
    path.write_text(first)
    assert main(["check", str(path)]) == 0
    assert "applicable: long-cycle, euler" in capsys.readouterr().out


def test_malformed_graph(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"pattern": ')
    assert main(["check", str(bad)]) == 2
    assert "line" in capsys.readouterr().err


def test_dot(sample_file, tmp_path, capsys):
    assert main(["dot", str(sample_file), "--walk", str(write_walk(tmp_path, sample_cycle()))]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph") and "v5" in out
