"""Command-line front end: ``kwsgp analyze | verify | table | render | enumerate``.

Every command builds a report dictionary and emits it deterministically
(JSON with sorted keys and two-space indent, or CSV/SVG/text). Exit status
is 0 on success, 1 when a verification finds a counterexample and 2 on
invalid input, in which case a JSON error object goes to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from math import comb

from . import errors
from .kw2d import KWParams, enumerate_kw, family_size, kw_corners
from .kw3d import (KW3Params, build_kw3, parse_params, scan_tables, single_points,
                   type3_theorem, verify_apery_characterization)
from .presentation import all_minors, appendix_generators, betti_elements, verify_kw_presentation
from .principal import principal_matrix_bruteforce, verify_theorem31
from .render import kw3_points, path_svg
from .resolution import resolution_ed3, resolution_ed4, verify_complex
from .semigroup import build, minimalize

SCHEMA = "kwsgp/1"
DEFAULT_CAP = 100_000
EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


# --- parsing -----------------------------------------------------------------

def _ints(text: str, what: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise errors.InvalidSpec(f"{what}: expected comma-separated integers, got {text!r}")


def _tuples(text: str, arity: int, what: str) -> list[tuple[int, ...]]:
    out = []
    for chunk in (text or "").split(","):
        if not chunk.strip():
            continue
        parts = chunk.split(":")
        if len(parts) != arity:
            raise errors.InvalidSpec(f"{what}: {chunk!r} needs {arity} ':'-separated integers")
        try:
            out.append(tuple(int(p) for p in parts))
        except ValueError:
            raise errors.InvalidSpec(f"{what}: {chunk!r} is not integral")
    return out


def _kw_params(text: str) -> KWParams:
    vals = _ints(text, "--kw")
    if len(vals) != 2:
        raise errors.InvalidSpec(f"--kw expects p,q, got {text!r}")
    return KWParams(*vals)


def _cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get("KWSGP_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise errors.InvalidSpec(f"KWSGP_CAP={env!r} is not an integer")
    return DEFAULT_CAP


def _target(args) -> str:
    given = [name for name in ("gens", "kw", "kw3") if getattr(args, name, None)]
    if len(given) != 1:
        raise errors.InvalidSpec("give exactly one of --gens, --kw, --kw3")
    return given[0]


# --- report pieces -----------------------------------------------------------

def _matrix(P) -> dict:
    return {"generators": list(P.gens), "entries": [list(r) for r in P.entries],
            "diagonal": list(P.diagonal)}


def _semigroup_summary(H, order, apery: bool) -> dict:
    betti = betti_elements(H)
    out = {
        "generators": list(H.gens),
        "multiplicity": H.multiplicity,
        "embedding_dimension": H.embdim,
        "frobenius": H.frobenius,
        "gaps_count": len(H.gaps()),
        "pseudo_frobenius": list(H.pseudo_frobenius()),
        "type": H.type,
        "symmetric": H.is_symmetric(),
        "mu": betti.mu,
        "betti_elements": [{"degree": d, "count": k} for d, k in betti.elements],
    }
    if H.embdim >= 2:
        out["principal_matrix"] = _matrix(principal_matrix_bruteforce(order))
    if apery:
        out["apery"] = {str(m): list(H.apery(m).elements) for m in H.gens}
    return out


def _member_key(c) -> dict:
    return {"corners": [list(pt) for pt in c.corners], "halved": c.halved,
            "generators": list(c.generators), "n": len(c.generators)}


def cmd_analyze(args) -> tuple[dict, int]:
    target = _target(args)
    result: dict = {}
    if target == "gens":
        raw = _ints(args.gens, "--gens")
        gens = minimalize(raw)
        H = build(gens)
        order = list(dict.fromkeys(g for g in raw if g in gens))
        result.update(_semigroup_summary(H, order, args.apery))
    elif target == "kw":
        params = _kw_params(args.kw)
        c = kw_corners(params, _tuples(args.corners, 2, "--corners"))
        H = build(minimalize(c.generators))
        result.update(_semigroup_summary(H, list(c.generators), args.apery))
        kw = _member_key(c)
        if c.corners:
            rep = verify_theorem31(c)
            kw["closed_form"] = {"case": rep.case, **_matrix(rep.closed_form),
                                 "diagonal_agrees": rep.diagonal_agrees,
                                 "exact_match": rep.exact_match}
        kw["p"], kw["q"] = params.p, params.q
        result["kw"] = kw
    else:
        params = parse_params(_ints(args.kw3, "--kw3"))
        points = _tuples(args.points, 3, "--points")
        K = build_kw3(params, points)
        result.update(_semigroup_summary(K.H, list(K.H.gens), args.apery))
        kw3 = {"params": [params.p, params.q, params.r1, params.r2, params.s],
               "w": params.w, "frobenius_base": params.frobenius,
               "points": [{"point": list(pt), "value": params.gamma(*pt)} for pt in K.points],
               "strict_class": K.strict_class}
        if len(points) == 1:
            kw3["type3"] = _type3_dict(type3_theorem(params, points[0]))
        if points:
            ap = verify_apery_characterization(K)
            kw3["apery_characterization"] = {"generators": list(ap.generators),
                                             "intersection": list(ap.intersection),
                                             "equal": ap.ok}
        result["kw3"] = kw3
    return _report("analyze", vars(args), result, "pass"), EXIT_OK


def _type3_dict(r) -> dict:
    return {"point": list(r.point), "h": r.h, "strict": r.strict,
            "p_x": r.p_x, "p_y": r.p_y, "p_z": r.p_z, "p_z_in_H": r.p_z_in_H,
            "predicted_pf": list(r.predicted_pf), "actual_pf": list(r.actual_pf),
            "applicable": r.applicable, "agrees": r.agrees, "status": r.status}


# --- verification drivers ----------------------------------------------------

KW_THEOREMS = ("principal", "presentation", "determinantal", "resolution")
KW3_THEOREMS = ("type3", "apery")


def _check_kw(theorem: str, p: int, q: int, corners) -> dict:
    c = kw_corners(KWParams(p, q), corners)
    key = _member_key(c)
    if theorem == "principal":
        if not c.corners:
            return {"member": key, "status": "not-applicable"}
        try:
            rep = verify_theorem31(c)
        except errors.TheoremViolation as exc:
            rep = exc.payload
        return {"member": key, "status": "pass" if rep.ok else "fail",
                "detail": {"case": rep.case, "closed_form": _matrix(rep.closed_form),
                           "bruteforce": _matrix(rep.bruteforce),
                           "exact_match": rep.exact_match}}
    if theorem == "presentation":
        try:
            rep = verify_kw_presentation(c)
        except errors.TheoremViolation as exc:
            rep = exc.payload
        return {"member": key, "status": "pass" if rep.ok else "fail",
                "detail": {"n": rep.n, "mu": rep.mu, "expected_mu": comb(rep.n, 2),
                           "type": rep.type, "expected_type": rep.n - 1,
                           "appendix_degrees": list(rep.appendix_degrees),
                           "betti_elements": [list(e) for e in rep.betti.elements]}}
    if theorem == "determinantal":
        if not 3 <= c.n <= 5 or not c.corners:
            return {"member": key, "status": "not-applicable"}
        appendix = set(appendix_generators(c))
        minors = all_minors(c)
        return {"member": key, "status": "pass" if appendix == minors else "fail",
                "detail": {"missing": sorted(str(b) for b in appendix - minors),
                           "extra": sorted(str(b) for b in minors - appendix)}}
    if theorem == "resolution":
        if c.n == 3 and c.corners:
            cx = resolution_ed3(p, q, *c.corners[0])
        elif c.n == 4:
            cx = resolution_ed4(p, q, c.corners)
        else:
            return {"member": key, "status": "not-applicable"}
        rep = verify_complex(cx)
        detail = {"form": cx.form, "ranks": list(cx.ranks), "shifts": cx.shifts}
        if not rep.ok:
            detail["failure"] = {"reason": rep.reason, "matrix": rep.matrix,
                                 "row": rep.row, "col": rep.col, "detail": rep.detail}
        return {"member": key, "status": "pass" if rep.ok else "fail", "detail": detail}
    raise errors.InvalidSpec(f"unknown theorem {theorem!r}")


def _check_kw3(theorem: str, params: tuple, point) -> dict:
    P = KW3Params(*params)
    key = {"point": list(point), "h": P.gamma(*point)}
    if theorem == "type3":
        r = type3_theorem(P, point)
        return {"member": key, "status": r.status, "detail": _type3_dict(r)}
    if theorem == "apery":
        K = build_kw3(P, [point])
        if not K.strict_class:
            return {"member": key, "status": "not-applicable"}
        ap = verify_apery_characterization(K)
        return {"member": key, "status": "pass" if ap.ok else "fail",
                "detail": {"generators": list(ap.generators),
                           "intersection": list(ap.intersection)}}
    raise errors.InvalidSpec(f"unknown theorem {theorem!r}")


def _star(task):
    fn, *rest = task
    return fn(*rest)


def _run(tasks, jobs: int) -> list[dict]:
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_star, tasks, chunksize=4))
    return [_star(t) for t in tasks]


def cmd_verify(args) -> tuple[dict, int]:
    target = _target(args)
    cap = _cap(args)
    if target == "kw":
        params = _kw_params(args.kw)
        theorem = args.theorem or "presentation"
        if theorem not in KW_THEOREMS:
            raise errors.InvalidSpec(f"--theorem for --kw is one of {KW_THEOREMS}")
        size = family_size(params)
        if size > cap:
            raise errors.CapExceeded(f"KW({params.p},{params.q}) has {size} members > cap {cap}")
        members = enumerate_kw(params)
        tasks = [(_check_kw, theorem, params.p, params.q, m.lattice_corners)
                 for m in members]
        family = {"kw": [params.p, params.q], "size": size}
    elif target == "kw3":
        P = parse_params(_ints(args.kw3, "--kw3"))
        theorem = args.theorem or "type3"
        if theorem not in KW3_THEOREMS:
            raise errors.InvalidSpec(f"--theorem for --kw3 is one of {KW3_THEOREMS}")
        pts = single_points(P)
        if len(pts) > cap:
            raise errors.CapExceeded(f"{len(pts)} points > cap {cap}")
        tasks = [(_check_kw3, theorem, (P.p, P.q, P.r1, P.r2, P.s), pt) for pt in pts]
        family = {"kw3": [P.p, P.q, P.r1, P.r2, P.s], "size": len(pts)}
    else:
        raise errors.InvalidSpec("verify needs --kw or --kw3")
    results = _run(tasks, args.jobs)
    results.sort(key=lambda r: json.dumps(r["member"], sort_keys=True))
    counts = {s: sum(r["status"] == s for r in results) for s in ("pass", "fail", "not-applicable")}
    first = next((r for r in results if r["status"] == "fail"), None)
    status = "fail" if first else "pass"
    result = {"theorem": theorem, "family": family, "counts": counts,
              "members": results, "first_counterexample": first}
    return _report("verify", vars(args), result, status), EXIT_FAIL if first else EXIT_OK


# --- tables ------------------------------------------------------------------

TABLES = {
    "type-5-7": ("h", "type"),
    "mu-5-7": ("h", "mu"),
    "mu2-5-7": ("h_prime", "mu"),
}
TABLE_PARAMS = (5, 7, 2, 1, 3)
TABLE_FIRST_GAP = 73


def table_rows(table_id: str) -> list[tuple[int, int]]:
    if table_id not in TABLES:
        raise errors.UnknownTable(f"unknown table {table_id!r}; choose from {sorted(TABLES)}")
    scans = scan_tables(KW3Params(*TABLE_PARAMS), TABLE_FIRST_GAP)
    if table_id == "type-5-7":
        rows = [(r.h, r.type) for r in scans["single"]]
    elif table_id == "mu-5-7":
        rows = [(r.h, r.mu) for r in scans["single"]]
    else:
        rows = [(r.h, r.mu) for r in scans["pairs"]]
    return sorted(rows, key=lambda hv: (hv[1], hv[0]))


def table_csv(table_id: str) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLES[table_id] if table_id in TABLES else ())
    w.writerows(table_rows(table_id))
    return buf.getvalue()


def cmd_table(args) -> tuple[str | dict, int]:
    if args.json:
        header = TABLES.get(args.table_id)
        rows = table_rows(args.table_id)
        return _report("table", vars(args),
                       {"table": args.table_id, "columns": list(header),
                        "rows": [list(r) for r in rows]}, "pass"), EXIT_OK
    return table_csv(args.table_id), EXIT_OK


# --- render / enumerate ------------------------------------------------------

def cmd_render(args) -> tuple[str | dict, int]:
    target = _target(args)
    if target == "kw":
        c = kw_corners(_kw_params(args.kw), _tuples(args.corners, 2, "--corners"))
        return path_svg(c), EXIT_OK
    if target == "kw3":
        P = parse_params(_ints(args.kw3, "--kw3"))
        data = kw3_points(P, _tuples(args.points, 3, "--points"))
        return _report("render", vars(args), data, "pass"), EXIT_OK
    raise errors.InvalidSpec("render needs --kw or --kw3")


def cmd_enumerate(args) -> tuple[str | dict, int]:
    target = _target(args)
    cap = _cap(args)
    if target == "kw":
        params = _kw_params(args.kw)
        if family_size(params) > cap:
            raise errors.CapExceeded(f"{family_size(params)} members > cap {cap}")
        rows = [_member_key(m) for m in enumerate_kw(params)]
        if args.csv:
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(("corners", "generators", "n"))
            for r in rows:
                w.writerow((" ".join(f"{x}:{y}" for x, y in r["corners"]) or r["halved"] or "",
                            " ".join(map(str, r["generators"])), r["n"]))
            return buf.getvalue(), EXIT_OK
        return _report("enumerate", vars(args), {"members": rows, "count": len(rows)}, "pass"), EXIT_OK
    if target == "kw3":
        P = parse_params(_ints(args.kw3, "--kw3"))
        rows = [{"point": list(pt), "h": P.gamma(*pt), "strict": P.is_strict(pt)}
                for pt in single_points(P)]
        if args.csv:
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(("x", "y", "z", "h", "strict"))
            for r in rows:
                w.writerow((*r["point"], r["h"], int(r["strict"])))
            return buf.getvalue(), EXIT_OK
        return _report("enumerate", vars(args), {"members": rows, "count": len(rows)}, "pass"), EXIT_OK
    raise errors.InvalidSpec("enumerate needs --kw or --kw3")


# --- plumbing ----------------------------------------------------------------

def _report(command: str, inputs: dict, result, status: str) -> dict:
    echo = {k: v for k, v in inputs.items() if k not in ("func", "out") and v is not None}
    return {"schema": SCHEMA, "command": command, "inputs": echo,
            "result": result, "status": status}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _text(report: dict) -> str:
    """Short human-readable summary; ``--json`` gives the full report."""
    cmd, res = report["command"], report["result"]
    if cmd == "verify":
        c = res["counts"]
        lines = [f"{res['theorem']} {res['family']}: {c['pass']} pass, {c['fail']} fail, "
                 f"{c['not-applicable']} not applicable"]
        if res["first_counterexample"]:
            lines.append("first counterexample:")
            lines.append(dumps(res["first_counterexample"]).rstrip())
        return "\n".join(lines) + "\n"
    if cmd == "analyze":
        lines = [f"generators {res['generators']}",
                 f"frobenius {res['frobenius']}  gaps {res['gaps_count']}",
                 f"pseudo-frobenius {res['pseudo_frobenius']}  type {res['type']}",
                 f"mu {res['mu']}  betti degrees {[b['degree'] for b in res['betti_elements']]}"]
        if "principal_matrix" in res:
            pm = res["principal_matrix"]
            lines.append(f"principal matrix (generators {pm['generators']}):")
            lines += ["  " + " ".join(f"{a:4d}" for a in row) for row in pm["entries"]]
        if "closed_form" in res.get("kw", {}):
            cf = res["kw"]["closed_form"]
            lines.append(f"closed form case {cf['case']}, diagonal agrees {cf['diagonal_agrees']}")
        if "kw3" in res:
            k = res["kw3"]
            lines.append(f"strict class {k['strict_class']}")
            if "type3" in k:
                t = k["type3"]
                lines.append(f"type-3 prediction {t['predicted_pf']}: {t['status']}")
        return "\n".join(lines) + "\n"
    return dumps(report)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _emit_error("UsageError", message)
        sys.exit(EXIT_INPUT)


def _emit_error(kind: str, message: str) -> None:
    sys.stderr.write(dumps({"schema": SCHEMA, "error": {"type": kind, "message": message}}))


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="kwsgp", description="Kunz-Waldi numerical semigroups")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def target(p, kw3=True):
        p.add_argument("--gens", help="generators a,b,c,...")
        p.add_argument("--kw", help="KW(p,q) as p,q")
        p.add_argument("--corners", default="", help="corner points x:y,...")
        if kw3:
            p.add_argument("--kw3", help="3D class as p,q,r1,r2,s")
            p.add_argument("--points", default="", help="lattice points x:y:z,...")

    def common(p):
        p.add_argument("--json", action="store_true", help="emit the full JSON report")
        p.add_argument("--out", help="write output to FILE")

    a = sub.add_parser("analyze", help="invariants of one semigroup")
    target(a)
    a.add_argument("--apery", action="store_true", help="include Apery sets of all generators")
    common(a)
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="exhaustive theorem check over a family")
    target(v)
    v.add_argument("--theorem", choices=KW_THEOREMS + KW3_THEOREMS)
    v.add_argument("--cap", type=int, help="maximum family size (env KWSGP_CAP)")
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    common(v)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="type / mu tables over R(5,7,2,1,3)")
    t.add_argument("table_id", help=", ".join(sorted(TABLES)))
    t.add_argument("--csv", action="store_true", help="CSV output (default)")
    common(t)
    t.set_defaults(func=cmd_table)

    r = sub.add_parser("render", help="lattice path SVG or 3D point data")
    target(r)
    common(r)
    r.set_defaults(func=cmd_render)

    e = sub.add_parser("enumerate", help="list the members of a family")
    target(e)
    e.add_argument("--csv", action="store_true", help="CSV output instead of JSON")
    e.add_argument("--cap", type=int, help="maximum family size (env KWSGP_CAP)")
    common(e)
    e.set_defaults(func=cmd_enumerate)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, code = args.func(args)
    except errors.KWError as exc:
        _emit_error(type(exc).__name__, str(exc))
        return EXIT_INPUT
    if isinstance(out, dict):
        text = dumps(out) if args.json or args.command in ("render", "enumerate", "table") \
            else _text(out)
    else:
        text = out
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
