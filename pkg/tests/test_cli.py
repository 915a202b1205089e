import json

import pytest

from dominion_lab.cli import main
from dominion_lab.monoid import cyclic, nine_element
from dominion_lab.textio import dump_monoid, load_monoid, parse_monoid, parse_monoids


@pytest.fixture
def b9_file(tmp_path):
    p = tmp_path / "b9.txt"
    p.write_text(dump_monoid(nine_element()))
    return str(p)


@pytest.fixture
def c3_file(tmp_path):
    p = tmp_path / "c3.txt"
    p.write_text(dump_monoid(cyclic(3)))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_nine_element(capsys, b9_file):
    code, out, _ = run(capsys, "analyze", b9_file, "--variety", "V(1,2)")
    assert code == 0
    assert out.splitlines()[0] == "order 9; SI: yes; variety: V(1,2); inverse monoid: no"
    assert "cong monolith blocks: {0} {1} {2} {3} {4} {5} {6} {7,8}" in out
    assert "in V(1,2): yes; core size 9" in out


def test_analyze_cyclic3(capsys, c3_file):
    code, out, _ = run(capsys, "analyze", c3_file)
    assert code == 0 and "variety: V(3,0); inverse monoid: yes" in out


def test_analyze_records(capsys, c3_file):
    code, out, _ = run(capsys, "--format", "records", "analyze", c3_file)
    rec = json.loads(out)
    assert rec["variety"] == "V(3,0)" and rec["zero"] is None


def test_malformed_row(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("monoid x\norder 2\nneutral 0\ntable\n0 1\n1\nend\n")
    code, _, err = run(capsys, "analyze", str(p))
    assert code == 2 and "line 6" in err and "row 1" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "analyze", str(tmp_path / "nope.txt"))
    assert code == 2 and err.startswith("error:")


def test_dominion_escapes(capsys, b9_file):
    code, out, _ = run(capsys, "dominion", b9_file, "generate", "6", "2", "3", "--witnesses")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "dominion nine_element over {0, 2, 3, 6, 8}: {0, 2, 3, 6, 7, 8} method: both"
    assert lines[1] == "escapes A: 7 (111)"
    assert "zigzag n=1 args: 6 2 3 z: 1 w: 4 value: 7" in out


def test_dominion_all_and_inverse(capsys, b9_file, c3_file):
    code, out, _ = run(capsys, "dominion", b9_file, "elements", *map(str, range(9)))
    assert code == 0 and "dominion = A (absolutely closed)" in out
    code, out, _ = run(capsys, "dominion", c3_file, "elements", "0")
    assert "dominion = A (absolutely closed)" in out


def test_dominion_bad_spec(capsys, b9_file):
    assert run(capsys, "dominion", b9_file, "elements", "0", "1")[0] == 2
    assert run(capsys, "dominion", b9_file, "elements", "0", "12")[0] == 2
    assert run(capsys, "dominion", b9_file, "pick", "0")[0] == 2


def test_dominion_discrepancy_exit(capsys, b9_file):
    code, _, err = run(capsys, "dominion", b9_file, "generate", "6", "2", "3", "--cap", "0")
    assert code == 3 and "disagree" in err


def test_zigzag(capsys, b9_file):
    code, out, _ = run(capsys, "zigzag", b9_file, "generate", "6", "2", "3", "--target", "7")
    assert code == 0 and out.strip() == "zigzag n=1 args: 6 2 3 z: 1 w: 4 value: 7"
    code, out, _ = run(capsys, "zigzag", b9_file, "generate", "6", "2", "3", "--target", "2")
    assert out.strip() == "zigzag n=0 args: 2 z:  w:  value: 2"
    code, out, _ = run(capsys, "zigzag", b9_file, "generate", "6", "2", "3", "--target", "4")
    assert out.strip() == "none"


def test_cap_env(capsys, b9_file, monkeypatch):
    monkeypatch.setenv("DOMINION_LAB_CAP", "0")
    code, out, _ = run(capsys, "zigzag", b9_file, "generate", "6", "2", "3", "--target", "7")
    assert out.strip() == "none"
    monkeypatch.setenv("DOMINION_LAB_CAP", "x")
    assert run(capsys, "zigzag", b9_file, "generate", "6", "2", "3", "--target", "7")[0] == 2


def test_pushout_round_trip(capsys, b9_file, tmp_path):
    out_path = tmp_path / "po.txt"
    code, _, _ = run(capsys, "pushout", b9_file, "elements", *map(str, range(9)), "--out", str(out_path))
    assert code == 0
    M = load_monoid(out_path)
    assert M.order == 9
    assert "# hom p1 nine_element -> " in out_path.read_text()
    code, out, _ = run(capsys, "pushout", b9_file, "generate", "6", "2", "3")
    assert parse_monoid(out).order == 21


def test_enumerate_round_trip(capsys, tmp_path):
    p = tmp_path / "all.txt"
    assert run(capsys, "enumerate", "--max-order", "3", "--out", str(p))[0] == 0
    ms = parse_monoids(p.read_text())
    assert [M.order for M in ms] == [1, 2, 2, 3, 3, 3, 3, 3]
    code, out, _ = run(capsys, "enumerate", "--max-order", "4", "--si-only", "--variety", "V(1,1)")
    assert code == 0 and all(M.order <= 4 for M in parse_monoids(out))


def test_laws_run(capsys):
    code, out, _ = run(capsys, "laws", "run", "--max-order", "3", "--law", "grillet", "--law", "weak_es")
    assert code == 0 and out.count("PASS") == 2
    code, out, _ = run(capsys, "--format", "records", "laws", "run", "--max-order", "3", "--law", "grillet")
    assert json.loads(out)["passed"] is True
    assert run(capsys, "laws", "run", "--max-order", "3", "--law", "si_dichotomy")[0] == 2
    assert run(capsys, "laws", "run", "--max-order", "9")[0] == 2


def test_laws_counterexample_exit(capsys, monkeypatch):
    from dominion_lab import cli
    from dominion_lab.laws import LawReport

    monkeypatch.setitem(cli.LAWS, "grillet", lambda cfg: LawReport("grillet", 1, ["fake"]))
    code, out, _ = run(capsys, "laws", "run", "--max-order", "2", "--law", "grillet")
    assert code == 1 and "fake" in out


def test_builtin(capsys):
    code, out, _ = run(capsys, "builtin", "nine_element")
    assert code == 0 and parse_monoid(out) == nine_element()
    assert run(capsys, "builtin", "monogenic:2,1")[0] == 0
    assert run(capsys, "builtin", "cyclic:0")[0] == 2
    assert run(capsys, "builtin", "quaternions")[0] == 2


def test_bad_variety_flag(capsys, c3_file):
    with pytest.raises(SystemExit) as info:
        main(["analyze", c3_file, "--variety", "V(x)"])
    assert info.value.code == 2
