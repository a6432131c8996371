"""Report builders shared by the text and ``--json`` outputs."""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable, Optional

from ..ambient import AmbientElem, ambient_trace, c_mass
from ..assoc import assoc_at, defect, defect_components
from ..core import Hyper, HyperSet, Sign
from ..hyperadd import fold_bracketings
from ..hyperaxioms import AxiomReport, HyperfieldReport, check_axioms, check_hyperfield
from ..signlayer import reachable, sop, witnesses
from .expr import EvalResult

SWEEP_HEADER = ("a", "b", "c", "m_L", "m_R", "defect")


def rat(r: Fraction) -> str:
    return str(r)


def hyper_json(h: Hyper) -> dict:
    return {"sign": h.sign.symbol, "mag": rat(h.mag)}


def set_json(s: HyperSet) -> list:
    return [hyper_json(h) for h in s]


def signs_json(signs: Iterable[Sign]) -> list:
    return [s.symbol for s in sorted(signs)]


def ambient_json(u: AmbientElem) -> dict:
    return {"shadow": rat(u.shadow), "mass": rat(u.mass)}


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"


# --- eval --------------------------------------------------------------------

def eval_report(source: str, result: EvalResult) -> dict:
    out = {"command": "eval", "expr": source, "value": set_json(result.value_set)}
    if result.trace is not None:
        out["trace"] = [{"expr": s, "value": set_json(v)} for s, v in result.trace]
    return out


def eval_text(result: EvalResult) -> str:
    lines = []
    if result.trace is not None:
        for s, v in result.trace:
            lines.append(f"{s} => {v}")
    lines.append(str(result.value_set))
    return "\n".join(lines) + "\n"


# --- brackets ----------------------------------------------------------------

def brackets_report(operands: list[Hyper]) -> dict:
    shapes = fold_bracketings(operands)
    values = list(shapes.values())
    out = {
        "command": "brackets",
        "operands": [hyper_json(h) for h in operands],
        "shapes": [{"shape": k, "value": set_json(v)} for k, v in shapes.items()],
        "all_agree": all(v == values[0] for v in values),
    }
    if len(operands) == 3:
        r = assoc_at(*operands)
        out["assoc"] = {"left": set_json(r.left), "right": set_json(r.right),
                        "equal": r.equal, "intersects": r.intersects}
    return out


def brackets_text(report: dict) -> str:
    lines = [f"operands: {' '.join(_h(d) for d in report['operands'])}"]
    for item in report["shapes"]:
        lines.append(f"{item['shape']}: {_set(item['value'])}")
    lines.append(f"all bracketings agree: {_yes(report['all_agree'])}")
    if "assoc" in report:
        a = report["assoc"]
        lines.append(f"left  (x+y)+z: {_set(a['left'])}")
        lines.append(f"right x+(y+z): {_set(a['right'])}")
        lines.append(f"equal: {_yes(a['equal'])}  intersects: {_yes(a['intersects'])}")
    return "\n".join(lines) + "\n"


# --- defect / ambient ------------------------------------------------------------

def ambient_report(a: Fraction, b: Fraction, c: Fraction) -> dict:
    t = ambient_trace(a, b, c)
    return {
        "command": "ambient",
        "a": rat(a), "b": rat(b), "c": rat(c),
        "U": ambient_json(t.U),
        "left_read": hyper_json(t.left_read),
        "right_read": hyper_json(t.right_read),
        "defect": rat(t.defect),
        "c_mass": rat(c_mass(a, -b)),
    }


def ambient_text(report: dict) -> str:
    U = report["U"]
    return (
        f"U = ({U['shadow']}, {U['mass']})\n"
        f"right read P(U) = {_h(report['right_read'])}\n"
        f"left read P(a-b, c) = {_h(report['left_read'])}\n"
        f"defect = {report['defect']}  c_mass(a,-b) = {report['c_mass']}\n"
    )


def defect_report(a: Fraction, b: Fraction, c: Fraction) -> dict:
    m_l, m_r = defect_components(a, b, c)
    d = defect(a, b, c)
    cm = c_mass(a, -b)
    amb = ambient_report(a, b, c)
    del amb["command"], amb["a"], amb["b"], amb["c"]
    return {
        "command": "defect",
        "a": rat(a), "b": rat(b), "c": rat(c),
        "m_L": rat(m_l), "m_R": rat(m_r), "defect": rat(d),
        "c_mass": rat(cm), "identity_holds": d == cm,
        "ambient": amb,
    }


def defect_text(report: dict) -> str:
    lines = [
        f"m_L = {report['m_L']}",
        f"m_R = {report['m_R']}",
        f"defect = {report['defect']}",
        f"c_mass(a,-b) = {report['c_mass']}  (equal: {_yes(report['identity_holds'])})",
    ]
    return "\n".join(lines) + "\n" + ambient_text(report["ambient"])


def frange(lo: Fraction, hi: Fraction, step: Fraction) -> list[Fraction]:
    out = []
    v = lo
    while v <= hi:
        out.append(v)
        v += step
    return out


def sweep_rows(amin, amax, bmin, bmax, step, c) -> list[dict]:
    rows = []
    for a in frange(amin, amax, step):
        for b in frange(bmin, bmax, step):
            m_l, m_r = defect_components(a, b, c)
            rows.append({"a": rat(a), "b": rat(b), "c": rat(c), "m_L": rat(m_l),
                         "m_R": rat(m_r), "defect": rat(defect(a, b, c))})
    return rows


def sweep_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=SWEEP_HEADER, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


# --- axioms ------------------------------------------------------------------

def axioms_report(source: str, magma, mul_table: Optional[dict]) -> tuple[dict, AxiomReport]:
    rep = check_hyperfield(magma, mul_table) if mul_table else check_axioms(magma)
    out = {
        "command": "axioms",
        "source": source,
        "carrier": list(magma.carrier),
        "axioms": rep.verdicts(),
        "neutral": rep.neutral,
        "counterexamples": [{"axiom": ax, "witness": list(w)} for ax, w in rep.counterexamples],
        "notes": list(rep.notes),
        "hyperfield": rep.is_hyperfield if isinstance(rep, HyperfieldReport) else None,
        "passed": rep.passed,
    }
    return out, rep


def axioms_text(report: dict) -> str:
    lines = [f"source: {report['source']}", f"carrier: {' '.join(report['carrier'])}"]
    for name, ok in report["axioms"].items():
        lines.append(f"{name}: {'pass' if ok else 'FAIL'}")
    for item in report["counterexamples"]:
        lines.append(f"counterexample {item['axiom']}: ({', '.join(item['witness'])})")
    for note in report["notes"]:
        lines.append(f"note: {note}")
    if report["hyperfield"] is not None:
        lines.append(f"hyperfield: {'pass' if report['hyperfield'] else 'FAIL'}")
    lines.append(f"overall: {'pass' if report['passed'] else 'FAIL'}")
    return "\n".join(lines) + "\n"


# --- envelope ----------------------------------------------------------------

def envelope_report(s: Sign, t: Sign) -> dict:
    book = witnesses(s, t)
    return {
        "command": "envelope",
        "s": s.symbol, "t": t.symbol,
        "sop": signs_json(sop(s, t)),
        "reachable": signs_json(reachable(s, t)),
        "witnesses": [{"sign": rho.symbol, "x": hyper_json(x), "y": hyper_json(y)}
                      for rho, (x, y) in book.items()],
        "equal": reachable(s, t) == sop(s, t),
    }


def envelope_text(report: dict) -> str:
    lines = [
        f"{report['s']} sop {report['t']} = {{{', '.join(report['sop'])}}}",
        f"reachable = {{{', '.join(report['reachable'])}}}",
    ]
    for w in report["witnesses"]:
        lines.append(f"  {w['sign']}: {_h(w['x'])} + {_h(w['y'])}")
    lines.append(f"equal: {_yes(report['equal'])}")
    return "\n".join(lines) + "\n"


def _h(d: dict) -> str:
    return "0" if d["sign"] == "0" else f"({d['sign']} {d['mag']})"


def _set(items: list) -> str:
    return "{" + ", ".join(_h(d) for d in items) + "}"


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"




def load_schema() -> dict:
    from importlib.resources import files

    return json.loads(files("hypernum.cli").joinpath("schema.json").read_text(encoding="utf-8"))
