from __future__ import annotations

import json
import subprocess
import sys

import pytest

from cliquezf.cli import main
from cliquezf.families import GRAMMAR


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_zplus_musical(capsys):
    assert run(capsys, "zplus", "--family", "musical:5") == (0, "7\n", "")


def test_zplus_show_set_and_json(capsys):
    code, out, _ = run(capsys, "zplus", "--family", "K:4", "--show-set")
    assert code == 0 and out == "3\nset: {0,1,2}\n"
    code, out, _ = run(capsys, "zplus", "--family", "C:5", "--format", "json")
    assert json.loads(out) == {"zplus": 2, "set": [0, 1]}


def test_compress_dot(capsys):
    code, out, _ = run(capsys, "compress", "--family", "circ:6:1,2", "--format", "dot")
    assert code == 0
    assert out.startswith("graph G {")
    assert sum(1 for line in out.splitlines() if "label=" in line) == 6


def test_compress_not_coverable_exits_1(capsys):
    code, _, err = run(capsys, "compress", "--family", "fig1")
    assert code == 1 and "simpl" in err


def test_inline_graph6_file_and_stdin(capsys, tmp_path, monkeypatch):
    assert run(capsys, "cc", "Bw")[:2] == (0, "1\ncover: {0,1,2}\nmin-max SI covers: 1\n")
    path = tmp_path / "p3.txt"
    path.write_text("3 2\n0 1\n1 2\n")
    code, out, _ = run(capsys, "cc", str(path), "--format", "json")
    assert code == 0 and json.loads(out) == {"cc": 2, "cover": [[0, 1], [1, 2]], "minmax_si_covers": 1}
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO("Bw\n"))
    assert run(capsys, "zplus", "-")[1] == "2\n"


def test_gen_and_out(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "musical:4", "--format", "graph6")
    assert code == 0 and len(out.strip()) > 1
    target = tmp_path / "m.json"
    assert run(capsys, "gen", "P:3", "--format", "json", "--out", str(target))[:2] == (0, "")
    assert json.loads(target.read_text())["edges"] == [[0, 1], [1, 2]]


def test_detect(capsys):
    code, out, _ = run(capsys, "detect", "--family", "star:3", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["claw_free"] is False and obj["may_be_compressed"] is False


def test_check_passes(capsys):
    code, out, _ = run(capsys, "check", "--corpus", "5", "--theorem", "thm-zplus-compress")
    assert code == 0 and "thm-zplus-compress" in out


def test_check_json_and_failure_exit(capsys):
    code, out, _ = run(capsys, "check", "--family", "vc:star:4", "--theorem", "thm-forest", "--json")
    assert code == 1
    (row,) = json.loads(out)
    assert row["verdict"] == "fail" and row["witness"]["graph6"]


def test_check_list(capsys):
    code, out, _ = run(capsys, "check", "--list")
    assert code == 0 and "cor-ccbound" in out


def test_corpus_command(capsys):
    code, out, _ = run(capsys, "corpus", "4")
    assert code == 0 and len(out.split()) == 10


@pytest.mark.parametrize("argv", [["gen", "bogus"], ["gen", "circ:6"], ["check", "--theorem", "nope"],
                                  ["zplus"], ["corpus", "9"], ["zplus", "not a graph"],
                                  ["zplus", "Bw", "--family", "K:3"]])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_bad_family_prints_grammar(capsys):
    _, _, err = run(capsys, "gen", "bogus")
    assert GRAMMAR in err


def test_argparse_error_prints_grammar(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    assert GRAMMAR in capsys.readouterr().err


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "cliquezf", "zplus", "--family", "musical:5"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "7\n"
