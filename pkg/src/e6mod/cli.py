"""Command-line front end: verification reports and threshold tables.

Exit codes: 0 when every check passes (or was corrected), 1 on a failed check, 2 on usage errors."""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Dict, List, Sequence

from . import d5modules as D

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DECOMPOSE_MAX = 12


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, float) or isinstance(v, (int, str, bool)) or v is None:
        return v
    return str(v)


def make_report(command: str, parameters: Dict, checks: List[dict]) -> dict:
    counts = {"pass": 0, "fail": 0, "corrected": 0}
    clean = []
    for c in checks:
        counts[c["status"]] += 1
        clean.append({"name": c["name"], "status": c["status"], "detail": _jsonable(c.get("detail", ""))})
    return {"command": command, "parameters": _jsonable(parameters), "checks": clean, "summary": counts}


def exit_code(report: dict) -> int:
    return EXIT_FAIL if report["summary"]["fail"] else EXIT_OK


def _row(name: str, ok: bool, detail="") -> dict:
    return {"name": name, "status": "pass" if ok else "fail", "detail": detail}


# ------------------------------------------------------------------ commands

def _run_section(name: str) -> List[dict]:
    from . import suites

    return {"lattice": suites.lattice_suite, "chevalley": suites.chevalley_suite,
            "realization": suites.realization_suite}[name]()


def cmd_verify_algebra(parallel: int = 1) -> dict:
    sections = ["lattice", "chevalley", "realization"]
    if parallel > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            results = list(pool.map(_run_section, sections))
    else:
        results = [_run_section(s) for s in sections]
    checks = []
    for name, rows in zip(sections, results):
        checks.extend({**r, "name": f"{name}: {r['name']}"} for r in rows)
    return make_report("verify-algebra", {"parallel": parallel}, checks)


def cmd_decompose(maxdeg: int) -> dict:
    from . import e6rep

    checks = []
    bound = min(maxdeg, e6rep.SINGULAR_DEGREE_BOUND)
    rep = e6rep.singular_vector_report(bound)
    for row in rep["rows"]:
        checks.append({"name": f"singular vectors in degree {row['degree']}",
                       "status": "pass" if row["matches_x1_zeta1_span"] else "fail",
                       "detail": {"dimension": row["dimension"], "expected": row["expected_dimension"],
                                  "basis": row["basis"]}})
    dim = e6rep.check_dimension_identity(maxdeg)
    for row in dim["rows"]:
        checks.append({"name": f"dimension identity, degree {row['degree']}",
                       "status": "pass" if row["ok"] else "fail",
                       "detail": {"terms": row["terms"], "sum": row["sum"], "binomial": row["binomial"]}})
    return make_report("decompose", {"maxdeg": maxdeg, "singular_degree_bound": bound}, checks)


def threshold_rows(family: str, k: int, c: Fraction | None) -> List[dict]:
    from . import functor as F
    from . import tables as T

    ex = F.irreducibility_exclusions(family, k)
    lmd = D.family_weight(family, k)
    c0, c1 = T.PRINTED_ELL[family]
    printed_ell = Fraction(c0) + Fraction(c1) * k
    f0, f1 = T.PRINTED_FLAT[family]
    printed_flat = Fraction(f0) + Fraction(f1) * k
    rows = [
        _row("ell_omega", ex["ell"] == printed_ell, {"computed": ex["ell"], "printed": printed_ell}),
        _row("flat", ex["flat"] == printed_flat, {"computed": ex["flat"], "printed": printed_flat}),
        _row("exclusion progressions", ex["matches_printed"],
             {"computed": [p["text"] for p in ex["progressions"]], "printed": ex["printed"],
              "only_computed": ex["only_computed"], "only_printed": ex["only_printed"], "window": ex["window"]}),
    ]
    if ex["notes"]:
        rows.append({"name": "printed union omits a redundant progression", "status": "corrected",
                     "detail": "; ".join(ex["notes"])})
    if c is not None:
        progs = [(p["offset"], p["step"]) for p in ex["progressions"]]
        excluded = F.is_excluded(c, progs)
        rows.append({"name": "parameter c", "status": "pass",
                     "detail": f"c = {c} is {'excluded' if excluded else 'not excluded'}"})
    rows.insert(0, {"name": "highest weight", "status": "pass", "detail": D.fmt_weight(lmd)})
    return rows


def cmd_thresholds(family: str, k: int, c: Fraction | None = None) -> dict:
    return make_report("thresholds", {"family": family, "k": k, "c": c}, threshold_rows(family, k, c))


def cmd_flows(samples: int, seed: int) -> dict:
    from . import flows

    rep = flows.flows_report(samples, seed)
    checks = []
    for r in rep["rows"]:
        detail = {"sigma": r["sigma"], "generator_error": r["generator_error"],
                  "composition_error": r["composition_error"]}
        if r["corrections"]:
            detail["printed_generator_error"] = r["printed_generator_error"]
            detail["printed_composition_error"] = r["printed_composition_error"]
            detail["corrections"] = r["corrections"]
        checks.append({"name": f"flow {r['index']}", "status": r["status"], "detail": detail})
    return make_report("flows", {"samples": samples, "seed": seed}, checks)


def cmd_verify_functor(family: str, k: int, c: Fraction, maxdeg: int) -> dict:
    from . import functor as F

    base = D.realize(family, k)
    checks = []
    tables = F.verify_iota_tables()
    checks.extend({"name": f"iota tables: {ch['name']}", "status": ch["status"], "detail": ch.get("detail", "")}
                  for ch in tables["checks"])
    rep = F.verify_functor(base, c, maxdeg)
    checks.append({"name": "[iota(u), iota(v)] = iota([u, v]) on slices", "status": rep["status"],
                   "detail": {"checked": rep["checked"], "failures": rep["failures"][:10],
                              "slice_degree": maxdeg, "base": base.name}})
    l61 = F.verify_degree_one_phi(base, c)
    checks.append({"name": "phi = tilde_omega - c/2 on the degree-one slice", "status": l61["status"],
                   "detail": {"dimension": l61["dimension"]}})
    t_ops = F.verify_T_ops()
    checks.extend({"name": ch["name"], "status": ch["status"], "detail": ch.get("detail", "")}
                  for ch in t_ops["checks"])
    l63 = F.verify_quadratic_identity_module(base, c, min(maxdeg, 3))
    checks.append({"name": "eight-term combination equals T_1 on slices", "status": l63["status"],
                   "detail": {"symbolic": l63["symbolic"], "slice_degree": l63["slice_degree"]}})
    return make_report("verify-functor", {"family": family, "k": k, "c": c, "maxdeg": maxdeg}, checks)


# ------------------------------------------------------------------ parsing

def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="also write the report as JSON")
    common.add_argument("--parallel", type=_positive, default=1, metavar="N")
    parser = argparse.ArgumentParser(prog="e6mod", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("verify-algebra", parents=[common], help="lattice, algebra and realization checks")
    p = sub.add_parser("decompose", parents=[common], help="singular vectors and the dimension identity")
    p.add_argument("--maxdeg", type=_nonneg, default=4, metavar="N")
    p = sub.add_parser("thresholds", parents=[common], help="irreducibility thresholds for a family")
    p.add_argument("--family", choices=D.FAMILIES, required=True)
    p.add_argument("--k", type=_positive, default=1)
    p.add_argument("--c", type=_rational, default=None)
    p = sub.add_parser("flows", parents=[common], help="fractional transformations against the vector fields")
    p.add_argument("--samples", type=_positive, default=100, metavar="N")
    p.add_argument("--seed", type=_nonneg, default=0, metavar="N")
    p = sub.add_parser("verify-functor", parents=[common], help="induced module checks")
    p.add_argument("--family", choices=D.FAMILIES, default="trivial")
    p.add_argument("--k", type=_positive, default=1)
    p.add_argument("--c", type=_rational, default=Fraction(1, 3))
    p.add_argument("--maxdeg", type=_nonneg, default=2, metavar="N")
    return parser


def render_text(report: dict) -> str:
    lines = [f"{report['command']} {json.dumps(report['parameters'], sort_keys=True)}"]
    for c in report["checks"]:
        detail = c["detail"] if isinstance(c["detail"], str) else json.dumps(c["detail"], sort_keys=True)
        lines.append(f"  [{c['status']:>9}] {c['name']}" + (f"  {detail}" if detail else ""))
    s = report["summary"]
    lines.append(f"summary: {s['pass']} pass, {s['corrected']} corrected, {s['fail']} fail")
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "decompose" and args.maxdeg > DECOMPOSE_MAX:
        print(f"e6mod decompose: --maxdeg must be at most {DECOMPOSE_MAX}", file=sys.stderr)
        return EXIT_USAGE
    runners: Dict[str, Callable[[], dict]] = {
        "verify-algebra": lambda: cmd_verify_algebra(args.parallel),
        "decompose": lambda: cmd_decompose(args.maxdeg),
        "thresholds": lambda: cmd_thresholds(args.family, args.k, args.c),
        "flows": lambda: cmd_flows(args.samples, args.seed),
        "verify-functor": lambda: cmd_verify_functor(args.family, args.k, args.c, args.maxdeg),
    }
    try:
        report = runners[args.command]()
    except ValueError as exc:
        print(f"e6mod {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(render_text(report))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
    return exit_code(report)


if __name__ == "__main__":
    sys.exit(main())
