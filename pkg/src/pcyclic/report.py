"""JSON and text rendering of code reports.

Schema (version 1)::

    {"schema_version": 1,
     "code": {"p", "m", "modulus", "exponents", "generator",
              "n", "k", "d", "optimal"} | null,
     "family": {"name", "params", "u", "v", "w",
                "checks": [{"name", "pass", "note"}]} | null,
     "witness": {"support", "coeffs"} | null}

Polynomials are ascending coefficient lists.  No floats appear anywhere, so
serialization with sorted keys is byte-stable under a parse/dump round trip.
"""

from __future__ import annotations

import json
from typing import Optional

from . import poly
from .code import CodeReport
from .constructions import FamilyInstance

SCHEMA_VERSION = 1


def code_dict(report: CodeReport) -> dict:
    code = report.code
    return {
        "p": code.ctx.p,
        "m": code.ctx.m,
        "modulus": list(code.ctx.modulus),
        "exponents": list(code.exponents),
        "generator": list(code.generator),
        "n": report.n,
        "k": report.k,
        "d": report.d,
        "optimal": report.optimal,
    }


def instance_checks(inst: FamilyInstance, report: Optional[CodeReport] = None,
                    problem: Optional[str] = None) -> list[dict]:
    out = [{"name": c.name, "pass": c.passed, "note": c.note} for c in inst.checks]
    if inst.criterion is not None:
        wit = inst.criterion.witness
        note = "no solution" if wit is None else ", ".join(f"{k}={v}" for k, v in wit.items())
        out.append({"name": "criterion", "pass": not inst.criterion.has_solution, "note": note})
    if inst.corollary is not None:
        name, optimal = inst.corollary
        out.append({"name": name, "pass": optimal, "note": "closed form predicts d=" + ("4" if optimal else "3")})
    pred = inst.predicted_d
    if problem is not None:
        out.append({"name": "classified", "pass": False, "note": problem})
    if report is not None:
        pred_txt = "none" if pred is None else str(pred)
        agree = pred is None or pred == report.d
        out.append({"name": "prediction agrees", "pass": agree,
                    "note": f"predicted d={pred_txt}, verified d={report.d}"})
    elif pred is not None and problem is not None:
        out.append({"name": "prediction agrees", "pass": False,
                    "note": f"predicted d={pred}, no code to verify"})
    return out


def family_dict(inst: FamilyInstance, w: Optional[int], report: Optional[CodeReport] = None,
                problem: Optional[str] = None) -> dict:
    return {
        "name": inst.family,
        "params": dict(inst.params),
        "u": inst.u,
        "v": inst.v,
        "w": w,
        "checks": instance_checks(inst, report, problem),
    }


def to_dict(report: Optional[CodeReport], inst: Optional[FamilyInstance] = None,
            w: Optional[int] = None, problem: Optional[str] = None) -> dict:
    witness = None
    if report is not None and report.witness is not None:
        witness = {"support": list(report.witness.support), "coeffs": list(report.witness.coefficients)}
    return {
        "schema_version": SCHEMA_VERSION,
        "code": None if report is None else code_dict(report),
        "family": None if inst is None else family_dict(inst, w, report, problem),
        "witness": witness,
    }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def disagrees(d: dict) -> bool:
    fam = d.get("family")
    if not fam:
        return False
    return any(c["name"] == "prediction agrees" and not c["pass"] for c in fam["checks"])


def render_text(d: dict) -> str:
    lines = []
    fam, code = d["family"], d["code"]
    if fam is not None:
        params = " ".join(f"{k}={v}" for k, v in sorted(fam["params"].items()))
        lines.append(f"{fam['name']} {params} u={fam['u']} v={fam['v']} w={fam['w']}".replace("  ", " "))
    if code is not None:
        verdict = "optimal" if code["optimal"] else "not optimal"
        lines.append(f"  p={code['p']} m={code['m']} modulus={poly.format_poly(tuple(code['modulus']))}")
        lines.append(f"  exponents={code['exponents']} [{code['n']},{code['k']},{code['d']}] {verdict}")
        lines.append(f"  generator {poly.format_poly(tuple(code['generator']))} ({poly.format_coeffs(tuple(code['generator']))})")
    if d["witness"] is not None:
        lines.append(f"  witness support={d['witness']['support']} coeffs={d['witness']['coeffs']}")
    if fam is not None:
        for c in fam["checks"]:
            mark = "ok  " if c["pass"] else "FAIL"
            lines.append(f"  [{mark}] {c['name']}: {c['note']}")
    return "\n".join(lines)
