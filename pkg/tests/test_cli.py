import json
import subprocess
import sys

import pytest

from morseconfig import cli
from morseconfig.morse_graph import MorseGraph

from conftest import H, Y


@pytest.fixture
def y_file(tmp_path):
    p = tmp_path / "y.tree"
    p.write_text(Y + "\n")
    return str(p)


@pytest.fixture
def h_file(tmp_path):
    p = tmp_path / "h.tree"
    p.write_text(H)
    return str(p)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_y_two(capsys, y_file):
    code, out, _ = run(capsys, "analyze", "--tree", y_file, "--n", "2")
    assert code == 0
    assert "banana B_2" in out and "b1=1" in out and "TC_2=1" in out


def test_analyze_json(capsys, y_file):
    code, out, _ = run(capsys, "analyze", "--tree", y_file, "--n", "2", "--format", "json")
    obj = json.loads(out)
    assert code == 0
    assert obj["homology"]["betti"]["1"] == 1
    assert obj["invariants"]["tc"]["2"] == 1
    assert obj["verification"]["ok"]


def test_verify_three(capsys, y_file):
    code, out, _ = run(capsys, "verify", "--tree", y_file, "--n", "3")
    assert code == 0
    assert "census match 18/18" in out


def test_graph_dot(capsys, y_file):
    code, out, _ = run(capsys, "graph", "--tree", y_file, "--n", "2", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")
    assert out.count("->") == 2 and out.count('sublevel="(2,2)"') == 2


def test_graph_json_roundtrip(capsys, h_file):
    code, out, _ = run(capsys, "graph", "--tree", h_file, "--n", "3", "--format", "json")
    assert code == 0
    g = MorseGraph.from_json(json.loads(out))
    assert len(g.vertices) == 6 and len(g.edges) == 36
    assert json.dumps(g.to_json(), indent=2) == out.strip()


def test_deterministic(capsys, h_file):
    a = run(capsys, "graph", "--tree", h_file, "--n", "3", "--format", "json")[1]
    b = run(capsys, "graph", "--tree", h_file, "--n", "3", "--format", "json")[1]
    assert a == b


def test_other_subcommands(capsys, h_file):
    for cmd in ("homology", "invariants", "census", "classify", "subdivide"):
        code, out, _ = run(capsys, cmd, "--tree", h_file, "--n", "3", "--format", "json")
        assert code == 0, cmd
        json.loads(out)


def test_homology_torsion_flag(capsys, y_file):
    code, out, _ = run(capsys, "homology", "--tree", y_file, "--n", "3", "--torsion")
    assert code == 0 and "torsion: none" in out and "b1=13" in out


def test_budget_refusal(capsys, y_file):
    code, _, err = run(capsys, "homology", "--tree", y_file, "--n", "3", "--budget", "100")
    assert code == 3 and "refused" in err


def test_bad_tree(capsys, tmp_path):
    p = tmp_path / "bad.tree"
    p.write_text("(()())")
    code, _, err = run(capsys, "verify", "--tree", str(p), "--n", "2")
    assert code == 2 and "bad tree" in err


def test_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "census", "--tree", str(tmp_path / "nope"), "--n", "2")
    assert code == 2


def test_no_essential_vertex(capsys, tmp_path):
    p = tmp_path / "path.tree"
    p.write_text("((()))")
    code, _, _ = run(capsys, "invariants", "--tree", str(p), "--n", "2")
    assert code == 2


def test_no_subdivide_rejected(capsys, y_file):
    code, _, _ = run(capsys, "graph", "--tree", y_file, "--n", "3", "--no-subdivide")
    assert code == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        cli.main(["frobnicate"])
    assert info.value.code == 2


def test_module_entry_point(y_file):
    proc = subprocess.run([sys.executable, "-m", "morseconfig", "census", "--tree", y_file,
                           "--n", "3"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "total edges: 18" in proc.stdout
