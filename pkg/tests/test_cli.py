import json
import subprocess
import sys

import pytest

from tangency.cli import main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_gen(capsys):
    assert run_json(capsys, "gen", "--poset", "bullet", "--n", "3")["count"] == 11
    assert run_json(capsys, "gen", "--poset", "omega", "--d", "4", "--mode", "upto")["count"] == 11
    code, _, err = run(capsys, "gen", "--poset", "omega", "--d", "-1")
    assert code == 2 and "error" in err


def test_order(capsys):
    res = run_json(capsys, "order", "--kind", "bullet", "3,1", "1,4,1")
    assert res["holds"] is True
    assert run_json(capsys, "order", "--kind", "omega", "1,2,1", "1,1")["holds"] is False
    res = run_json(capsys, "order", "--kind", "omega", "e", "2")
    assert res["holds"] is True and "witness" in res


def test_mor(capsys):
    res = run_json(capsys, "mor", "1,1", "1,2,1")
    assert [m["map"] for m in res["morphisms"]] == [[1, 3]]
    assert len(run_json(capsys, "mor", "--loose", "2", "1,2,1")["morphisms"]) == 1
    assert run_json(capsys, "mor", "2", "1,2,1")["morphisms"] == []


def test_cells_and_star(capsys):
    assert run_json(capsys, "cells", "--d", "4", "--ambient", "balanced")["counts"] == [1, 3, 4, 3]
    res = run_json(capsys, "star", "--omega", "4", "--d", "4")
    assert res["counts"] == [1, 3, 4, 3]
    assert run_json(capsys, "ram", "2", "2,2")["o"] == 2
    assert run(capsys, "ram", "2", "1,1")[0] == 3


def test_markers(capsys):
    res = run_json(capsys, "markers", "--omega", "1,1,1,1", "--marker", "3", "--merge", "1")
    assert res["markers"] == [1, 3]
    assert res["result"] == {"omega": [2, 1, 1], "marker": 2}
    res = run_json(capsys, "markers", "--omega", "1,1,1,1", "--marker", "3", "--target", "1,4,1")
    assert res["transport"]["markers"] == [1] and res["transport"]["unique"]
    # path-dependent transport is reported and exits with the domain code
    code, out, _ = run(capsys, "markers", "--omega", "2", "--marker", "1", "--target", "2,2")
    assert code == 3 and json.loads(out)["transport"]["markers"] == [1, 2]
    assert run(capsys, "markers", "--omega", "1,1", "--marker", "2")[0] == 3
    assert run(capsys, "markers", "--omega", "1,1", "--merge", "1")[0] == 2


def test_tmodel(capsys):
    res = run_json(capsys, "tmodel", "--omega", "4")
    assert res["f_vector"] == [1, 4, 6, 3]
    assert len(res["cells"]) == 14 and res["covers"]
    assert run_json(capsys, "tmodel", "--omega", "4", "--link")["f_vector"] == [4, 6, 3]


def test_classify(capsys):
    res = run_json(capsys, "classify", "--poly", "-2,5,-4,1")
    assert res["type"] == [2, 1]
    res = run_json(capsys, "classify", "--poly", "-2,0,1", "--components")
    assert res["type"] == [1, 1] and res["components"][0]["type"] == [1, 1]
    assert run(capsys, "classify", "--poly", "0")[0] == 3
    assert run(capsys, "classify", "--poly", "1,x")[0] == 2
    assert run(capsys, "classify", "--poly", "0,1", "--components")[0] == 3


def test_family(capsys):
    res = run_json(capsys, "family", "--coeffs", "-t**2,0,1", "--samples", "1,1/2,0")
    assert [r["type"] for r in res["rows"]] == [[1, 1], [1, 1], [2]] and res["ok"]
    code, out, _ = run(capsys, "family", "--coeffs", "-t**2,0,1", "--samples", "0,1")
    assert code == 1 and not json.loads(out)["ok"]


def test_verify(capsys):
    res = run_json(capsys, "verify", "--suite", "trajectory-census")
    assert res["ok"] and res["results"][0]["info"]["tmodel_4"] == [1, 4, 6, 3]
    assert run_json(capsys, "verify", "--suite", "morphism-reachability", "--max-d", "4")["ok"]
    assert run(capsys, "verify", "--suite", "nosuch")[0] == 2
    code, out, _ = run(capsys, "verify", "--suite", "bullet-morphism", "--max-n", "2")
    assert code == 1 and json.loads(out)["results"][0]["counterexamples"]


def test_table_format(capsys):
    code, out, _ = run(capsys, "--format", "table", "cells", "--d", "4", "--ambient", "balanced")
    assert code == 0 and "3" in out and not out.lstrip().startswith("{")
    code, out, _ = run(capsys, "verify", "--suite", "euler", "--format", "table")
    assert code == 0 and out.startswith("PASS  euler")


def test_dot_output(capsys):
    code, out, _ = run(capsys, "hasse", "--poset", "omega", "--d", "4", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph") and out.rstrip().endswith("}")
    assert "subgraph cluster_rank_0" in out and "rank=same" in out and "->" in out
    covers = run_json(capsys, "tmodel", "--omega", "4")["covers"]
    code, out, _ = run(capsys, "tmodel", "--omega", "4", "--format", "dot")
    assert code == 0 and out.count("->") == len(covers)
    assert run(capsys, "classify", "--poly", "1,0,1", "--format", "dot")[0] == 2


def test_out_file(capsys, tmp_path):
    target = tmp_path / "hasse.dot"
    code, out, _ = run(capsys, "--out", str(target), "hasse", "--poset", "bullet", "--n", "2", "--format", "dot")
    assert code == 0 and out == ""
    assert target.read_text().startswith("digraph")


@pytest.mark.parametrize("argv", [
    ("hasse", "--poset", "bullet", "--n", "3"),
    ("tmodel", "--omega", "1,4,1"),
    ("classify", "--poly", "-2,0,1", "--components"),
    ("verify", "--suite", "euler"),
])
def test_byte_determinism(capsys, argv):
    first = run(capsys, *argv)[1]
    assert first and run(capsys, *argv)[1] == first


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tangency", "cells", "--d", "4", "--ambient", "balanced"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["counts"] == [1, 3, 4, 3]
