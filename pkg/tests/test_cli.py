import json
import os
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest

from hypernum.cli.main import main
from hypernum.cli.render import load_schema

GOLDEN = Path(__file__).parent / "golden"

CORPUS = [
    ("eval_left", ["eval", "((+ 1) + (- 1)) + (L 1)", "--json"], "json"),
    ("eval_right", ["eval", "(+ 1) + ((- 1) + (L 1))", "--json"], "json"),
    ("eval_trace", ["eval", "(- 2) * ((+ 1) + (- 3))", "--trace", "--json"], "json"),
    ("brackets_witness", ["brackets", "(+ 1)", "(- 1)", "(L 1)", "--json"], "json"),
    ("brackets_classical", ["brackets", "(+ 1)", "(+ 2)", "(+ 3)", "--json"], "json"),
    ("brackets_single", ["brackets", "(L 5/2)", "--json"], "json"),
    ("defect_111", ["defect", "1", "1", "1", "--json"], "json"),
    ("defect_317", ["defect", "3", "1", "7", "--json"], "json"),
    ("defect_sweep_json", ["defect", "1", "1", "1", "--sweep", "1", "2", "1", "2", "1/2", "--json"], "json"),
    ("defect_sweep", ["defect", "1", "1", "1", "--sweep", "1", "4", "1", "4", "1"], "csv"),
    ("axioms_sset", ["axioms", "sset", "--json"], "json"),
    ("axioms_sign_hyperfield", ["axioms", "sign_hyperfield", "--json"], "json"),
    ("envelope_pm", ["envelope", "+", "-", "--json"], "json"),
    ("envelope_LL", ["envelope", "L", "L", "--json"], "json"),
    ("envelope_0L", ["envelope", "0", "L", "--json"], "json"),
    ("ambient_111", ["ambient", "1", "1", "1", "--json"], "json"),
    ("ambient_214", ["ambient", "2", "1", "4", "--json"], "json"),
]


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name,argv,ext", CORPUS, ids=[c[0] for c in CORPUS])
def test_golden(name, argv, ext, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0
    path = GOLDEN / f"{name}.{ext}"
    if os.environ.get("UPDATE_GOLDEN"):
        path.write_text(out, encoding="utf-8")
    assert out.encode() == path.read_bytes()
    if ext == "json":
        jsonschema.validate(json.loads(out), load_schema())


def test_sweep_defect_column(capsys):
    _, out, _ = run(["defect", "1", "1", "1", "--sweep", "1", "4", "1", "4", "1"], capsys)
    lines = out.splitlines()
    assert lines[0] == "a,b,c,m_L,m_R,defect"
    rows = [dict(zip(lines[0].split(","), ln.split(","))) for ln in lines[1:]]
    assert len(rows) == 16
    for r in rows:
        a, b = Fraction(r["a"]), Fraction(r["b"])
        assert Fraction(r["defect"]) == 2 * min(a, b)
        assert Fraction(r["m_R"]) - Fraction(r["m_L"]) == Fraction(r["defect"])


def test_witness_bracketings_from_cli(capsys):
    _, left, _ = run(["eval", "((+ 1) + (- 1)) + (L 1)", "--json"], capsys)
    _, right, _ = run(["eval", "(+ 1) + ((- 1) + (L 1))", "--json"], capsys)
    assert json.loads(left)["value"] == [{"sign": "L", "mag": "1"}]
    assert json.loads(right)["value"] == [{"sign": "L", "mag": "3"}]


def test_brackets_report_fields(capsys):
    _, out, _ = run(["brackets", "(+ 1)", "(- 1)", "(L 1)", "--json"], capsys)
    rep = json.loads(out)
    assert len(rep["shapes"]) == 2 and not rep["all_agree"]
    assert rep["assoc"]["equal"] is False and rep["assoc"]["intersects"] is False


def test_text_outputs(capsys):
    _, out, _ = run(["brackets", "(+ 1)", "(+ 2)", "(+ 3)"], capsys)
    assert "all bracketings agree: yes" in out
    _, out, _ = run(["axioms", "sset"], capsys)
    assert out.count("pass") == 6
    _, out, _ = run(["envelope", "+", "-"], capsys)
    assert "+: (+ 2) + (- 1)" in out and "equal: yes" in out


@pytest.mark.parametrize("argv,code", [
    (["eval", "(L 0)"], 2),
    (["eval", "(+ 1"], 1),
    (["eval", "(+ 1.5)"], 1),
    (["defect", "0", "1", "1"], 2),
    (["defect", "1", "-1", "1"], 2),
    (["defect", "1.5", "1", "1"], 1),
    (["ambient", "1", "1", "0"], 2),
    (["envelope", "+", "x"], 1),
    (["axioms", "nope"], 1),
    (["axioms", "--file", "/nonexistent/table.txt"], 1),
    (["brackets"] + ["(+ 1)"] * 13, 1),
    (["frobnicate"], 1),
    ([], 1),
])
def test_exit_codes(argv, code, capsys):
    try:
        got = main(argv)
    except SystemExit as exc:
        got = exc.code
    assert got == code
    assert capsys.readouterr().err


def test_axioms_from_file(tmp_path, capsys):
    table = tmp_path / "bad.txt"
    src = (GOLDEN.parent / "data" / "sset_mutated.txt").read_text()
    table.write_text(src)
    code, out, _ = run(["axioms", "--file", str(table), "--json"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert not rep["passed"]
    assert {"axiom": "HG2", "witness": ["+", "+", "-"]} in rep["counterexamples"]
    jsonschema.validate(rep, load_schema())
    code, _, _ = run(["axioms", "--file", str(table), "--expect-pass"], capsys)
    assert code == 3
    code, _, _ = run(["axioms", "sset", "--expect-pass"], capsys)
    assert code == 0


def test_axioms_file_with_multiplication(capsys):
    path = GOLDEN.parent / "data" / "z3_field.txt"
    code, out, _ = run(["axioms", "--file", str(path), "--json", "--expect-pass"], capsys)
    assert code == 0 and json.loads(out)["hyperfield"] is True


def test_malformed_table_reports_line(tmp_path, capsys):
    table = tmp_path / "dup.txt"
    table.write_text("carrier: 0\n0 + 0 = {0}\n0 + 0 = {0}\n")
    code, _, err = run(["axioms", "--file", str(table)], capsys)
    assert code == 1 and "line 3" in err


def test_repl(monkeypatch, capsys):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO("(+ 1) + (- 1)\n(L 0)\nquit\n"))
    assert main(["repl"]) == 0
    out = capsys.readouterr().out
    assert "{0}" in out and "magnitude must be positive" in out


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "hypernum.cli", "envelope", "0", "L"],
                         capture_output=True, text=True, check=True).stdout
    assert "L" in out.splitlines()[0]
