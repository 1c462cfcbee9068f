"""Command-line front end.

Exit codes: 0 ok, 2 invalid input, 3 degenerate defining set,
4 a family's predicted distance disagrees with direct verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Optional

from . import poly, report
from .code import (
    CodeReport,
    brute_force_min_distance,
    build_code,
    classify,
    sphere_packing_max_d,
)
from .constructions import (
    FAMILIES,
    derive_u,
    family_T1,
    family_T2,
    family_T4,
    family_T5,
)
from .cyclotomic import all_cosets
from .errors import DegenerateDefiningSet, PCyclicError
from .field import DEFAULT_TABLE_CAP, FieldCtx, make_field

EXIT_OK, EXIT_INVALID, EXIT_DEGENERATE, EXIT_MISMATCH = 0, 2, 3, 4
ORACLE_LIMIT = 64


def int_list(text: str) -> list[int]:
    """``"2..5"``, ``"5,13,29"`` or a mix such as ``"2..3,7"``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def _field(args, p: Optional[int] = None, m: Optional[int] = None) -> FieldCtx:
    modulus = poly.parse_coeffs(args.modulus) if getattr(args, "modulus", None) else None
    return make_field(p if p is not None else args.p, m if m is not None else args.m,
                      modulus, args.table_cap)


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# single-object commands

def cmd_field(args) -> int:
    ctx = _field(args)
    info = {
        "p": ctx.p, "m": ctx.m, "q": ctx.q, "order": ctx.order,
        "modulus": list(ctx.modulus), "alpha": list(ctx.coeffs(ctx.alpha)),
    }
    if args.format == "json":
        _emit(args, report.dumps(info))
    else:
        _emit(args, f"GF({ctx.p}^{ctx.m}): q={ctx.q}, multiplicative order {ctx.order}\n"
                    f"modulus {poly.format_poly(ctx.modulus)} ({poly.format_coeffs(ctx.modulus)})\n"
                    f"alpha = x is primitive\n")
    return EXIT_OK


def cmd_cosets(args) -> int:
    ctx = _field(args)
    cosets = all_cosets(ctx.p, ctx.order)
    if args.format == "json":
        _emit(args, report.dumps({
            "p": ctx.p, "m": ctx.m, "n": ctx.order,
            "cosets": [{"leader": c.leader, "size": c.size, "elements": list(c.elements)} for c in cosets],
        }))
    else:
        lines = [f"{c.leader}:{c.size}" for c in cosets]
        lines.append(f"total {sum(c.size for c in cosets)} = {ctx.order}")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_minpoly(args) -> int:
    ctx = _field(args)
    f = poly.minimal_polynomial(ctx, args.exp % ctx.order)
    if args.format == "json":
        _emit(args, report.dumps({"p": ctx.p, "m": ctx.m, "exp": args.exp, "minpoly": list(f)}))
    else:
        _emit(args, f"{poly.format_coeffs(f)}\n{poly.format_poly(f)}\n")
    return EXIT_OK


def _classify_exponents(ctx: FieldCtx, exps: list[int]) -> CodeReport:
    exps = [e % ctx.order for e in exps]
    rest = sorted(set(exps) - {0, 1})
    if {0, 1} <= set(exps) and len(rest) == 1:
        return classify(ctx, rest[0])
    code = build_code(ctx, exps)
    if code.n > ORACLE_LIMIT:
        raise PCyclicError("only C_p(0,1,w) can be classified beyond the oracle size")
    d = brute_force_min_distance(code, 4)
    if d is None:
        raise PCyclicError("minimum distance exceeds 4; not pinned by this checker")
    bound = sphere_packing_max_d(ctx.p, code.n, code.n - code.k)
    return CodeReport(code, d, d == bound, None, {"d_from_oracle": True})


def cmd_build(args) -> int:
    ctx = _field(args)
    rep = _classify_exponents(ctx, int_list(args.exps))
    d = report.to_dict(rep)
    if args.format == "json":
        _emit(args, report.dumps(d))
    else:
        text = report.render_text(d)
        if args.oracle and rep.n <= ORACLE_LIMIT:
            text += f"\n  oracle d={brute_force_min_distance(rep.code, 4)}"
        _emit(args, text + "\n")
    return EXIT_OK


# family work items

def _instances(family: str, p: int, m: int, params: dict):
    if family == "t1":
        return family_T1(p, m, params["h"], params["k"])
    if family == "t2":
        return family_T2(p, m, params["h"], params["k"])
    if family.startswith("t4c"):
        return [family_T4(p, m, int(family[3]), params.get("k"))]
    if family == "t5":
        return [family_T5(p, m)]
    raise PCyclicError(f"unknown family {family!r}")


def _t5_skip(p: int, m: int) -> dict:
    n = p**m - 1
    return {
        "schema_version": report.SCHEMA_VERSION,
        "code": None,
        "family": {
            "name": "t5", "params": {}, "u": (p**m + 1) // 2, "v": n - 2, "w": None,
            "checks": [{"name": "p=1 (mod 4) and m odd", "pass": False,
                        "note": f"p mod 4 = {p % 4}, m = {m}"}],
        },
        "witness": None,
    }


def run_item(item: tuple, ctx: FieldCtx, oracle: bool = False) -> list[dict]:
    """All reports for one (family, p, m, params) work item."""
    family, p, m, params = item
    if family == "t5" and (p % 4 != 1 or m % 2 == 0):
        return [_t5_skip(p, m)]
    out = []
    for inst in _instances(family, p, m, dict(params)):
        ws = inst.distinct_w()
        if not ws:
            out.append(report.to_dict(None, inst, None, problem="no candidate exponent w"))
        for w in ws:
            try:
                rep = classify(ctx, w)
            except DegenerateDefiningSet as exc:
                out.append(report.to_dict(None, inst, w, problem=str(exc)))
                continue
            d = report.to_dict(rep, inst, w)
            if oracle and rep.n <= ORACLE_LIMIT:
                od = brute_force_min_distance(rep.code, 4)
                d["family"]["checks"].append({"name": "oracle d", "pass": od == rep.d, "note": f"oracle d={od}"})
            out.append(d)
    return out


def _sort_key(d: dict, item: tuple) -> tuple:
    fam = d["family"]
    w = fam["w"] if fam["w"] is not None else -1
    return (item[0], item[1], item[2], json.dumps(fam["params"], sort_keys=True), fam["v"], w)


def expand_items(families: Iterable[str], ps: Iterable[int], ms: Iterable[int],
                 hs: Optional[list[int]] = None, ks: Optional[list[int]] = None) -> list[tuple]:
    items = []
    for fam in families:
        for p in ps:
            for m in ms:
                if fam in ("t1", "t2"):
                    for h in (hs if hs is not None else range(m)):
                        for k in (ks if ks is not None else range(m)):
                            if not (0 <= h < m and 0 <= k < m) or (fam == "t2" and k == 0):
                                continue
                            items.append((fam, p, m, (("h", h), ("k", k))))
                elif fam in ("t4c1", "t4c2"):
                    for k in (ks if ks is not None else range(m)):
                        if 0 <= k < m:
                            items.append((fam, p, m, (("k", k),)))
                else:
                    items.append((fam, p, m, ()))
    return items


_WORKER_CONTEXTS: dict = {}


def _init_worker(contexts: dict) -> None:
    _WORKER_CONTEXTS.clear()
    _WORKER_CONTEXTS.update(contexts)


def _work(job: tuple) -> list[tuple]:
    item, oracle = job
    ctx = _WORKER_CONTEXTS[item[1], item[2]]
    return [(_sort_key(d, item), d) for d in run_item(item, ctx, oracle)]


def run_scan(items: list[tuple], contexts: dict, jobs: int = 1, oracle: bool = False) -> list[dict]:
    """Reports for every item, ordered independently of ``jobs``."""
    work = [(item, oracle) for item in items]
    if jobs <= 1:
        _init_worker(contexts)
        chunks = [_work(job) for job in work]
    else:
        with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker,
                                 initargs=(contexts,)) as pool:
            chunks = list(pool.map(_work, work, chunksize=max(1, len(work) // (4 * jobs))))
    keyed = [kd for chunk in chunks for kd in chunk]
    keyed.sort(key=lambda kd: kd[0])
    return [d for _, d in keyed]


def _summary(reports: list[dict]) -> str:
    opt = sum(1 for d in reports if d["code"] and d["code"]["optimal"])
    non = sum(1 for d in reports if d["code"] and not d["code"]["optimal"])
    skipped = sum(1 for d in reports if d["code"] is None)
    bad = sum(1 for d in reports if report.disagrees(d))
    return f"{len(reports)} reports: {opt} optimal, {non} non-optimal, {skipped} skipped, {bad} disagreements"


def _families(text: str) -> list[str]:
    fams = list(FAMILIES) if text == "all" else [f.strip().lower() for f in text.split(",")]
    for f in fams:
        if f not in FAMILIES:
            raise PCyclicError(f"unknown family {f!r}; choose from {', '.join(FAMILIES)}")
    return fams


def _contexts(args, ps, ms) -> dict:
    if args.modulus and (len(ps) > 1 or len(ms) > 1):
        raise PCyclicError("--modulus needs a single p and m")
    return {(p, m): _field(args, p, m) for p in ps for m in ms}


def _write_reports(args, reports: list[dict]) -> None:
    if args.format == "json":
        _emit(args, report.dumps(reports))
    else:
        _emit(args, "\n".join(report.render_text(d) for d in reports) + "\n" + _summary(reports) + "\n")


def cmd_verify(args) -> int:
    fam = _families(args.family)
    if len(fam) != 1:
        raise PCyclicError("verify takes a single family")
    fam = fam[0]
    params: tuple = ()
    if fam in ("t1", "t2"):
        if args.h is None or args.k is None:
            raise PCyclicError(f"{fam} needs --h and --k")
        params = (("h", args.h), ("k", args.k))
    elif fam in ("t4c1", "t4c2"):
        if args.k is None:
            raise PCyclicError(f"{fam} needs --k")
        params = (("k", args.k),)
    item = (fam, args.p, args.m, params)
    ctx = _field(args)
    reports = run_item(item, ctx, args.oracle)
    for d in reports:
        if d["family"]:
            failed = [c["name"] for c in d["family"]["checks"] if not c["pass"]
                      and c["name"] not in ("criterion", "prediction agrees", "classified")
                      and not c["name"].startswith("cor")]
            if failed and fam.startswith("t4c"):
                print(f"CaseHypothesisFailed: {', '.join(failed)}", file=sys.stderr)
            elif failed and fam == "t5" and d["code"] is None:
                print(f"HypothesisFailed: {', '.join(failed)}", file=sys.stderr)
    _write_reports(args, reports)
    return EXIT_MISMATCH if any(report.disagrees(d) for d in reports) else EXIT_OK


def cmd_scan(args) -> int:
    fams = _families(args.family)
    ps, ms = int_list(args.p), int_list(args.m)
    hs = int_list(args.h) if args.h else None
    ks = int_list(args.k) if args.k else None
    if args.jobs < 1:
        raise PCyclicError("--jobs must be >= 1")
    for p in ps:
        derive_u(p, 1)
    contexts = _contexts(args, ps, ms)
    reports = run_scan(expand_items(fams, ps, ms, hs, ks), contexts, args.jobs, args.oracle)
    _write_reports(args, reports)
    print(_summary(reports), file=sys.stderr)
    return EXIT_MISMATCH if any(report.disagrees(d) for d in reports) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pcyclic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, single=True):
        if single:
            sp.add_argument("--p", type=int, required=True, help="characteristic")
            sp.add_argument("--m", type=int, required=True, help="extension degree")
        sp.add_argument("--modulus", help="ascending coefficients, e.g. 2,4,4,0,1")
        sp.add_argument("--table-cap", type=int, default=DEFAULT_TABLE_CAP,
                        help="largest field order to tabulate")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--out", help="write output here instead of stdout")

    sp = sub.add_parser("field", help="summarize GF(p^m)")
    common(sp)
    sp.set_defaults(func=cmd_field)

    sp = sub.add_parser("cosets", help="cyclotomic coset leaders and sizes")
    common(sp)
    sp.set_defaults(func=cmd_cosets)

    sp = sub.add_parser("minpoly", help="minimal polynomial of alpha^exp")
    common(sp)
    sp.add_argument("--exp", type=int, required=True)
    sp.set_defaults(func=cmd_minpoly)

    sp = sub.add_parser("build", help="classify the code with the given defining exponents")
    common(sp)
    sp.add_argument("--exps", required=True, help="comma-separated exponents, e.g. 0,1,122")
    sp.add_argument("--oracle", action="store_true", help="cross-check d by enumeration (n <= 64)")
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("verify", help="instantiate one family member and verify it")
    common(sp)
    sp.add_argument("--family", required=True, help=", ".join(FAMILIES))
    sp.add_argument("--h", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--oracle", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("scan", help="sweep families over ranges of p, m and parameters")
    common(sp, single=False)
    sp.add_argument("--family", required=True, help="comma list or 'all'")
    sp.add_argument("--p", required=True, help="primes, e.g. 5,13,29")
    sp.add_argument("--m", required=True, help="degrees, e.g. 2..5")
    sp.add_argument("--h", help="restrict h (default: all 0 <= h < m)")
    sp.add_argument("--k", help="restrict k (default: all 0 <= k < m)")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--oracle", action="store_true")
    sp.set_defaults(func=cmd_scan)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DegenerateDefiningSet as exc:
        print(f"DegenerateDefiningSet: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (PCyclicError, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
