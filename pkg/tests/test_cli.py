import json
import subprocess
import sys

import pytest

from gbeatty.cli import Report, emit, parse_bfile, run


def test_pair_search_golden():
    code, text = run(["pair-search", "--alpha", "golden", "--depth", "10000"])
    assert code == 0
    assert "(1,0,0,1,1,0)" in text and "(-1,3,-1,1,2,0)" in text


def test_transform_001():
    code, text = run(["transform", "--w", "001", "--n", "20"])
    assert code == 0
    assert "01201220120122012" in text
    assert "(2,-1,2)" in text


def test_pair_check_sqrt8_collision():
    code, text = run(["pair-check", "--v", "1,4,0", "--w", "-1,4,0", "--alpha", "sqrt:8", "--depth", "1000"])
    assert code == 1
    code, text = run(["--format", "json", "pair-check", "--v", "1,4,0", "--w", "-1,4,0",
                      "--alpha", "sqrt:8", "--depth", "1000"])
    d = json.loads(text)
    assert d["verdict"] == "failed"
    assert [6, 2] in d["collisions"] and 1 in d["missing"]


def test_pair_check_schema():
    code, text = run(["--format", "json", "pair-check", "--v", "1,0,0", "--w", "1,1,0", "--depth", "500"])
    assert code == 0
    assert {"verdict", "depth", "missing", "collisions"} <= set(json.loads(text))


def test_usage_errors():
    assert run(["frobnicate"])[0] == 2
    assert run([])[0] == 2
    assert run(["eval"])[0] == 2
    assert run(["--format", "xml", "eval", "--v", "1,0,0"])[0] == 2
    assert run(["pair-check", "--v", "1,0,0", "--w", "1,1,0", "--depth", "1"])[0] == 2


def test_bfile():
    code, text = run(["--format", "bfile", "eval", "--v", "1,0,0", "--n", "3"])
    assert code == 0
    assert text == "1 1\n2 3\n3 4\n"


def test_bfile_round_trip():
    code, text = run(["--format", "bfile", "eval", "--v", "gbs:-1,4,-1@sqrt:8", "--n", "200"])
    assert code == 0
    _, csv_text = run(["--format", "csv", "eval", "--v", "gbs:-1,4,-1@sqrt:8", "--n", "200"])
    rows = [tuple(int(x) for x in line.split(",")) for line in csv_text.strip().splitlines()[1:]]
    assert parse_bfile(text) == rows


def test_emit_empty_solutions():
    assert emit(Report(data={"solutions": []}, text=""), "json") == '{"solutions":[]}'


def test_emit_csv():
    rep = Report(data={}, text="", header=["n", "value"], rows=[(1, 1), (2, 3)])
    assert emit(rep, "csv").splitlines() == ["n,value", "1,1", "2,3"]


def test_fixpoint_and_fit():
    assert run(["fixpoint", "--morphism", "0>01;1>0", "--n", "17"]) == (0, "01001010010010100")
    code, text = run(["fit", "--terms", "1,2,4"])
    assert code == 0 and text.startswith("(-1,3,-1)")
    assert run(["fit", "--terms", "1,3,4,6,9"])[0] == 1


def test_triple_check_morphic():
    code, text = run(["triple-check", "--morphism", "1>121;2>13;3>13", "--seed", "1",
                      "--expect", "1=1,0,0", "--expect", "2=2,1,-1", "--expect", "3=3,2,0", "--depth", "2000"])
    assert code == 0, text


def test_returns_and_decompose_json():
    d = json.loads(run(["--format", "json", "returns", "--w", "00100"])[1])
    assert (d["r0"], d["r1"], d["r2"]) == ("0100101", "0010010100101", "00100101")
    code, text = run(["--format", "json", "decompose", "--w", "00100", "--depth", "2000"])
    assert code == 0
    assert len(json.loads(text)["letters"]["0"]["components"]) == 4
    assert run(["decompose", "--w", "10100"])[0] == 1
    code, text = run(["--format", "json", "decompose", "--w", "10100", "--allow-sr0-failure"])
    assert json.loads(text)["letters"]["0"]["uncovered"] == [1]


def test_pell():
    d = json.loads(run(["--format", "json", "pell", "--p", "5"])[1])
    assert d["results"][0]["witness"] == [1, 11]


@pytest.mark.parametrize("argv", [["eval", "--v", "1,0,0", "--n", "3"], ["frob"]])
def test_module_entry_point(argv):
    proc = subprocess.run([sys.executable, "-m", "gbeatty", *argv], capture_output=True, text=True)
    assert proc.returncode == run(argv)[0]
