import json
import subprocess
import sys

import pytest

from tokengraphs import from_graph6
from tokengraphs.cli import main, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_dot(tmp_path, capsys):
    dot = tmp_path / "out.dot"
    code, out, _ = run(capsys, "build", "--family", "cycle", "--n", "7", "--k", "2", "--dot", str(dot))
    assert code == 0
    assert json.loads(out)["vertices"] == 21
    text = dot.read_text()
    assert text.count("[label=") == 21 and '[label="{1,2}"]' in text


def test_build_path_histogram(capsys):
    code, out, _ = run(capsys, "build", "--family", "path", "--n", "6", "--k", "2")
    assert code == 0
    assert json.loads(out)["degree_histogram"] == {"1": 2, "2": 4, "3": 6, "4": 3}


def test_build_graph6(tmp_path, capsys):
    g6 = tmp_path / "f.g6"
    code, out, _ = run(capsys, "build", "--graph6", "C~", "--k", "2", "--graph6-out", str(g6))
    data = json.loads(out)
    assert code == 0 and data["vertices"] == 6 and data["degree_histogram"] == {"4": 6}
    assert from_graph6(g6.read_text()).n == 6
    src = tmp_path / "k4.g6"
    src.write_text("C~\n")
    code, out, _ = run(capsys, "build", "--graph6", str(src))
    assert json.loads(out)["edges"] == 6


def test_build_edges(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("1 2\n2 3\n3 1\n")
    code, out, _ = run(capsys, "build", "--edges", str(f), "--k", "2")
    assert code == 0 and json.loads(out)["vertices"] == 3


@pytest.mark.parametrize("argv,order", [
    (["aut", "--family", "star", "--n", "7", "--k", "2"], 720),
    (["aut", "--family", "grid", "--rows", "2", "--cols", "3", "--k", "2"], 8),
    (["aut", "--family", "path", "--n", "5"], 2),
    (["aut", "--family", "wheel", "--n", "6", "--k", "2", "--verify"], 12),
])
def test_aut(capsys, argv, order):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and json.loads(out)["order"] == order


def test_aut_output_is_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "aut", "--family", "cycle", "--n", "8", "--k", "3", "--out", str(a))
    run(capsys, "aut", "--family", "cycle", "--n", "8", "--k", "3", "--out", str(b), "--parallel")
    assert a.read_bytes() == b.read_bytes()
    run(capsys, "aut", "--family", "cycle", "--n", "5", "--timing", "--out", str(a))
    assert "seconds" in json.loads(a.read_text())


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "thm-cycle", "--n", "5..8")
    assert code == 0 and out.count("verified") == 4
    code, out, _ = run(capsys, "verify", "--claim", "thm-cycle", "--n", "4")
    assert code == 1 and "refuted" in out


def test_verify_conjecture(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "conj-cycle", "--n", "7..9", "--k", "3")
    assert code == 0 and out.count("conjecture-consistent") == 3


def test_verify_json_and_jobs(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "verify", "--claim", "thm-star", "--n", "5..7", "--out", str(a))
    run(capsys, "verify", "--claim", "thm-star", "--n", "5..7", "--out", str(b), "--jobs", "3")
    assert a.read_bytes() == b.read_bytes()
    items = json.loads(a.read_text())
    assert [i["orders"]["aut"] for i in items] == [24, 120, 720]


def test_verify_errors(capsys):
    assert run(capsys, "verify")[0] == 2
    assert run(capsys, "verify", "--claim", "nope")[0] == 2
    assert run(capsys, "verify", "--claim", "thm-cycle", "--n", "x..y")[0] == 2


def test_distance(capsys):
    assert run(capsys, "distance", "--n", "7", "--k", "3", "--u", "1,2,3", "--v", "5,6,7")[1] == "12\n"
    assert run(capsys, "distance", "--u", "2,4", "--v", "2,4")[1] == "0\n"
    code, out, _ = run(capsys, "distance", "--n", "6", "--k", "2", "--u", "1,2", "--v", "5,6", "--oracle")
    assert code == 0 and out == "8\noracle-agree\n"


@pytest.mark.parametrize("argv", [
    ["distance", "--u", "1,2", "--v", "1,2,3"],
    ["distance", "--n", "4", "--u", "1,9", "--v", "1,2"],
    ["distance", "--k", "3", "--u", "1,2", "--v", "3,4"],
    ["distance", "--u", "a", "--v", "1"],
    ["build", "--family", "cycle", "--n", "2", "--k", "1"],
    ["build", "--family", "grid", "--rows", "2"],
    ["build", "--family", "path", "--n", "5", "--k", "5"],
    ["build", "--graph6", "???", "--k", "1"],
    ["build", "--family", "path"],
    ["build"],
    ["build", "--family", "path", "--n", "4", "--graph6", "C~"],
])
def test_input_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["build", "--family", "hexagon"])
    assert exc.value.code == 2


def test_capacity_exit_3(capsys, monkeypatch):
    monkeypatch.setenv("TOKENGRAPHS_MAX_ORDER", "10")
    code, _, err = run(capsys, "build", "--family", "cycle", "--n", "7", "--k", "2")
    assert code == 3 and "capacity" in err


def test_parse_range():
    assert parse_range("3..5") == [3, 4, 5]
    assert parse_range("7") == [7]
    assert parse_range("3,5") == [3, 5]


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "tokengraphs", "aut", "--family", "path", "--n", "5"],
                         capture_output=True, text=True, check=True).stdout
    assert json.loads(out)["order"] == 2
