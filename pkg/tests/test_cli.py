import json
import os
import subprocess
import sys

import pytest

from graphpoly import graphs as G
from graphpoly.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_examples(capsys):
    assert run(capsys, "compute", "--poly", "domination", "--graph", "A_")[:2] == (0, "X^2 + 2*X\n")
    assert run(capsys, "compute", "--poly", "chromatic", "--edges", "n=3;0-1,1-2,0-2")[1] == "X^3 - 3*X^2 + 2*X\n"
    assert run(capsys, "compute", "--poly", "potts", "--graph", "A?")[1] == "X^2\n"


def test_compute_json_and_basis(capsys):
    code, out, _ = run(capsys, "compute", "--poly", "chromatic", "--graph", "A_", "--json")
    data = json.loads(out)
    assert code == 0 and data["text"] == "X^2 - X"
    code, out, _ = run(capsys, "compute", "--poly", "chromatic", "--edges", "n=3;0-1,1-2", "--basis", "falling")
    assert out.strip() == "X_(3) + X_(2)"


def test_framework_poly_by_name(capsys):
    g6 = G.encode_graph6(G.cycle_copies(4, 2))
    assert run(capsys, "compute", "--poly", "gen_ind:cycle-4", "--graph", g6)[1] == "2*X^4\n"


def test_exit_codes(capsys):
    code, _, err = run(capsys, "compute", "--poly", "chromatic", "--graph", "!!")
    assert code == 2 and "error" in err
    assert run(capsys, "compute", "--poly", "nonsense", "--graph", "A_")[0] == 2
    code, _, err = run(capsys, "compute", "--poly", "tutte", "--graph", G.encode_graph6(G.complete(8)))
    assert code == 3 and "TUTTE_MAX_M" in err
    code, out, _ = run(capsys, "--guard", "TUTTE_MAX_M=28", "compute", "--poly", "tutte",
                       "--graph", G.encode_graph6(G.cycle(4)))
    assert code == 0 and out == "X^3 + X^2 + X + Y\n"
    assert run(capsys, "frobnicate")[0] == 2


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", "--left", "chromatic", "--right", "chromatic", "--catalog", "n<=4")
    assert code == 0 and json.loads(out)["relation"] == "equivalent"
    code, out, _ = run(capsys, "compare", "--left", "chromatic", "--right", "tutte",
                       "--catalog", "n<=5", "--mode", "sdp")
    assert json.loads(out)["relation"] == "left-at-most-right"


def test_transform(capsys):
    code, out, _ = run(capsys, "transform", "--stable", "--poly", "domination", "--graph", "A_")
    data = json.loads(out)
    assert code == 0 and data["factors"] == ["X", "2*Y^2 + X", "Y^3 + X"] and data["a0"] == 6
    assert data["roundtrip"]
    code, out, _ = run(capsys, "transform", "--dense", "--poly", "chromatic", "--graph", "A_")
    assert code == 0 and json.loads(out)["roundtrip"]
    code, _, err = run(capsys, "transform", "--hurwitz", "--poly", "chromatic", "--graph", "A_")
    assert code == 2 and "non-negative" in err
    code, out, _ = run(capsys, "transform", "--sokal", "--poly", "spanning_tree_poly",
                       "--graph", G.encode_graph6(G.cycle(3)))
    assert code == 0 and json.loads(out)["roundtrip"]


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "--n", "4")
    assert code == 0 and len(out.split()) == 11
    assert run(capsys, "catalog", "--n", "0")[1] == "?\n"
    code, out, _ = run(capsys, "catalog", "--n", "3", "--filter", "connected", "--format", "jsonl")
    rows = [json.loads(x) for x in out.splitlines()]
    assert sorted(r["m"] for r in rows) == [2, 3]


def test_soleval_command(capsys):
    p3 = G.encode_graph6(G.path(3))
    assert run(capsys, "soleval", "--file", "fixtures/independence.sol", "--graph", p3)[1] == "X^2 + 3*X + 1\n"


def test_soleval_file(tmp_path, capsys):
    f = tmp_path / "edges.sol"
    f.write_text("# number of ordered adjacent pairs\nsum{u, v | E(u,v)} 1\n")
    assert run(capsys, "soleval", "--file", str(f), "--graph", "Bw")[1] == "6\n"
    f.write_text("sum{u | E(u)} 1")
    code, _, err = run(capsys, "soleval", "--file", str(f), "--graph", "Bw")
    assert code == 2 and "line 1" in err


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "dom-counterexamples")
    assert code == 0 and "summary:" in out and "FAIL" not in out
    assert run(capsys, "verify", "--suite", "no-such-suite")[0] == 2


def test_entry_point_is_deterministic():
    env = dict(os.environ)
    cmd = [sys.executable, "-m", "graphpoly", "compare", "--left", "char_poly_adjacency",
           "--right", "laplacian_char", "--catalog", "n<=5", "--mode", "sdp"]
    a = subprocess.run(cmd, capture_output=True, env=env, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, env=env, check=True).stdout
    assert a == b and json.loads(a)["relation"]


def test_guard_env_override():
    k8 = G.encode_graph6(G.complete(8))
    cmd = [sys.executable, "-m", "graphpoly", "compute", "--poly", "tutte", "--graph", k8]
    refused = subprocess.run(cmd, capture_output=True, text=True)
    assert refused.returncode == 3 and "TUTTE_MAX_M" in refused.stderr
    env = dict(os.environ, GPL_GUARD_OVERRIDE="TUTTE_MAX_M=28")
    res = subprocess.run(cmd, capture_output=True, text=True, env=env)
    assert res.returncode == 0 and res.stdout.endswith("720*X + 720*Y\n")
    bad = subprocess.run(cmd, capture_output=True, text=True, env=dict(os.environ, GPL_GUARD_OVERRIDE="NOPE=1"))
    assert bad.returncode == 2 and "NOPE" in bad.stderr and "Traceback" not in bad.stderr


def test_guard_flag_does_not_leak(capsys):
    from graphpoly.guards import GUARDS

    before = GUARDS["TUTTE_MAX_M"]
    run(capsys, "--guard", "TUTTE_MAX_M=30", "catalog", "--n", "2")
    assert GUARDS["TUTTE_MAX_M"] == before
