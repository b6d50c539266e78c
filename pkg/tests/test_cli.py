import json
import subprocess
import sys
from dataclasses import replace
from pathlib import Path

import pytest

import formlab
from formlab import cli
from formlab.harness import suites

S4 = "degree 4\n(1 2 3 4)\n(1 2)\n"


@pytest.fixture
def s4(tmp_path):
    path = tmp_path / "s4.grp"
    path.write_text(S4)
    return str(path)


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_text(s4, capsys):
    code, out, _ = run(["analyze", s4], capsys)
    assert code == 0
    assert "order 24" in out
    assert "chief series C2^2 C3^1 C2^1" in out


def test_analyze_json(s4, capsys):
    code, out, _ = run(["analyze", s4, "--json"], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["order"] == 24
    assert data["frattini"]["order"] == 1
    assert data["socle"]["order"] == 4
    assert data["cores"]["2"]["O_p"]["order"] == 4
    assert data["com"] == ["C2", "C3"]


def test_op(s4, capsys):
    assert run(["op", s4, "--compute", "cs:2"], capsys)[1].startswith("order 4")
    assert run(["op", s4, "--compute", "cp:3"], capsys)[1].startswith("order 12")
    assert run(["op", "builtin:A4", "--compute", "small-centralizer:1"], capsys)[1].startswith("order 4")
    assert run(["op", s4, "--compute", "small-centralizer:9"], capsys)[0] == 1


def test_residual_and_fcheck(s4, capsys):
    assert run(["residual", s4, "--formation", "supersoluble"], capsys)[1].startswith("order 4")
    code, out, _ = run(["fcheck", "builtin:A5", "--formation", "quasinilpotent"], capsys)
    assert code == 0 and "member" in out and "not" not in out


def test_member_both(s4, capsys):
    code, out, _ = run(["member", s4, "--satellite", _data("nilpotent.sat"), "--via", "both"], capsys)
    assert code == 0
    assert "definition: False" in out


def _data(rel):
    return str(Path(formlab.__file__).parent / "data" / "satellites" / rel)


def test_member_disagreement_exit_code(s4, capsys, monkeypatch):
    monkeypatch.setattr(cli, "membership_characterized", lambda G, spec: True)
    code, _, err = run(["member", s4, "--satellite", _data("nilpotent.sat")], capsys)
    assert code == 3 and "disagreement" in err


def test_error_exit_codes(tmp_path, capsys):
    assert run(["analyze", str(tmp_path / "missing.grp")], capsys)[0] == 1
    bad = tmp_path / "bad.grp"
    bad.write_text("degree 3\n(1 5)\n")
    code, _, err = run(["analyze", str(bad)], capsys)
    assert code == 1 and "line 2" in err
    assert run(["fcheck", "builtin:S3", "--formation", "nilpotentt"], capsys)[0] == 1
    assert run(["analyze", "builtin:nope"], capsys)[0] == 1


def test_verify_clean(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, text, _ = run(["verify", "--suite", "lemma-2.8", "--corpus", "builtin:24",
                         "--report", str(out)], capsys)
    assert code == 0
    assert "summary: lemma-2.8" in text
    assert json.loads(out.read_text())["violations"] == []


def test_verify_violation_exit_code(capsys, monkeypatch):
    suite = suites.SUITES["lemma-2.7"]
    monkeypatch.setitem(suites.SUITES, "lemma-2.7",
                        replace(suite, evaluate=lambda G, inst: (G.order() != 6, {})))
    code, out, _ = run(["verify", "--suite", "lemma-2.7", "--corpus", "builtin:12",
                        "--format", "json"], capsys)
    assert code == 2
    assert {v["group"] for v in json.loads(out)["violations"]} == {"S3", "C6"}


def test_corpus_gen(tmp_path, capsys):
    code, out, _ = run(["corpus", "gen", "--max-order", "12", "--out", str(tmp_path)], capsys)
    assert code == 0
    assert (tmp_path / "manifest.json").exists()
    assert run(["verify", "--suite", "lemma-2.7", "--corpus", str(tmp_path)], capsys)[0] == 0


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "formlab.cli", "analyze", "builtin:S3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "order 6" in proc.stdout
