"""Command-line interface: one binary, subcommand per computation.

stdout carries only the deterministic report (JSON by default, aligned
text with --format text); timings and diagnostics go to stderr so repeated
runs stay byte-identical.  Exit codes: 0 success, 1 a verification ran and
failed, 2 usage errors or infeasible sizes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .bipartition import bipartitions, decompose, expected_decomposition, theta_lift, vs_to_json
from .dualpair import (
    CASES,
    TowerConfig,
    conservation_check,
    first_occurrence,
    mu_of,
    mu_range_check,
    mu_sigma,
)
from .heckealg import HeckeElem, HeckeParams, gen_elem, he_mul
from .laurent import as_half, format_half
from .thetamod import GroupRepAtOne, ThetaModule, grade_dim_formula
from .weylbc import CosetSpec, distinguished_reps, length

MAX_VERIFY_DIM = 5000


def _parse_partition(text: str):
    try:
        obj = json.loads(text) if text.strip() else []
    except json.JSONDecodeError:
        raise ValueError(f"partition must be a JSON array, got {text!r}")
    if not isinstance(obj, list) or not all(isinstance(x, int) for x in obj):
        raise ValueError(f"partition must be a JSON array of integers, got {text!r}")
    return tuple(obj)


def _emit(args, obj, text_renderer):
    if args.format == "text":
        print(text_renderer(obj))
    else:
        print(json.dumps(obj, indent=2))


def _jobs(args) -> int:
    if args.jobs and args.jobs > 0:
        return args.jobs
    return os.cpu_count() or 1


# -- module-verify --------------------------------------------------------------


def _verify_columns_slice(task):
    l, lp, mu, lo, hi = task
    rep = ThetaModule(l, lp, as_half(mu)).verify_relations(columns=range(lo, hi))
    return rep["relations"]


def _verify_point(task):
    l, lp, mu, u0 = task
    rep = ThetaModule(l, lp, as_half(mu)).evaluate_at(u0).verify_relations()
    return {
        "point": u0,
        "ok": rep["ok"],
        "failed": [r["name"] for r in rep["relations"] if not r["ok"]],
    }


def _merge_slice_reports(parts):
    merged = []
    for rels in zip(*parts):
        name = rels[0]["name"]
        bad = next((r for r in rels if not r["ok"]), None)
        entry = {"name": name, "ok": bad is None}
        if bad is not None:
            entry["failure"] = bad["failure"]
        merged.append(entry)
    return merged


def cmd_module_verify(args) -> int:
    mu = as_half(args.mu)
    if args.case is not None and not mu_range_check(args.case, mu):
        print(f"error: mu={format_half(mu)} is out of range for case {args.case}", file=sys.stderr)
        return 2
    l, lp = args.l, args.lprime
    dim = sum(grade_dim_formula(l, lp, k) for k in range(min(l, lp) + 1))
    if dim > MAX_VERIFY_DIM:
        print(f"error: dimension {dim} exceeds the verification cap {MAX_VERIFY_DIM}", file=sys.stderr)
        return 2

    t0 = time.perf_counter()
    module = ThetaModule(l, lp, mu)
    jobs = min(_jobs(args), 8)
    if dim <= 300:
        if jobs > 1 and dim >= 64:
            cuts = [dim * i // jobs for i in range(jobs + 1)]
            tasks = [(l, lp, args.mu, cuts[i], cuts[i + 1]) for i in range(jobs)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                parts = list(pool.map(_verify_columns_slice, tasks))
            relations = _merge_slice_reports(parts)
            report = {
                "ok": all(r["ok"] for r in relations),
                "dimension": module.dim,
                "grades": module.grade_dims(),
                "relations": relations,
            }
        else:
            report = module.verify_relations()
        report["mode"] = "symbolic"
    else:
        plan = module.point_plan()
        points = plan["points"]
        if jobs > 1:
            tasks = [(l, lp, args.mu, u0) for u0 in points]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                reports = list(pool.map(_verify_point, tasks))
        else:
            reports = [_verify_point((l, lp, args.mu, u0)) for u0 in points]
        report = {
            "ok": all(r["ok"] for r in reports),
            "mode": "points",
            "dimension": module.dim,
            "grades": module.grade_dims(),
            "span": plan["span"],
            "points": points,
            "reports": reports,
        }
    elapsed = time.perf_counter() - t0

    for rel in report.get("relations", []):
        took = rel.pop("elapsed", None)
        line = f"{rel['name']}: {'PASS' if rel['ok'] else 'FAIL'}"
        if took is not None:
            line += f" ({took:.3f}s)"
        print(line, file=sys.stderr)
    print(f"module-verify l={l} lprime={lp} mu={format_half(mu)}: {elapsed:.2f}s", file=sys.stderr)

    def render(rep):
        lines = [f"dimension {rep['dimension']}  grades {rep['grades']}  mode {rep['mode']}"]
        if rep["mode"] == "symbolic":
            lines += [f"  {r['name']:<28} {'PASS' if r['ok'] else 'FAIL'}" for r in rep["relations"]]
        else:
            lines.append(f"  span {rep['span']}, {len(rep['points'])} points")
            lines += [f"  u0={r['point']:<4} {'PASS' if r['ok'] else 'FAIL'}" for r in rep["reports"]]
        lines.append("all relations hold" if rep["ok"] else "FAILURES found")
        return "\n".join(lines)

    _emit(args, report, render)
    return 0 if report["ok"] else 1


# -- combinatorial subcommands ----------------------------------------------------


def cmd_theta_lift(args) -> int:
    alpha, beta = _parse_partition(args.alpha), _parse_partition(args.beta)
    if sum(alpha) + sum(beta) != args.l:
        raise ValueError("label size must equal --l")
    lift = theta_lift(alpha, beta, args.l, args.lprime)
    obj = {
        "l": args.l,
        "lprime": args.lprime,
        "alpha": list(alpha),
        "beta": list(beta),
        "lift": vs_to_json(lift),
    }

    def render(o):
        lines = [f"lift of ({o['alpha']}, {o['beta']}) from rank {o['l']} to rank {o['lprime']}:"]
        lines += [f"  {item['bipartition']}  x{item['mult']}" for item in o["lift"]] or ["  0"]
        return "\n".join(lines)

    _emit(args, obj, render)
    return 0


def _tower_config(args) -> TowerConfig:
    if args.case is None or args.dimV0 is None or args.dimVp0 is None:
        raise ValueError("--case, --dimV0 and --dimVp0 are required")
    return TowerConfig(args.case, args.dimV0, args.dimVp0, args.chi_minus_one)


def cmd_first_occurrence(args) -> int:
    alpha, beta = _parse_partition(args.alpha), _parse_partition(args.beta)
    cfg = _tower_config(args)
    occ = first_occurrence(alpha, beta, args.l, cfg)
    obj = {
        "case": cfg.case.tag,
        "dimV0": cfg.dimV0,
        "dimVp0": cfg.dimVp0,
        "dimVt0": cfg.dimVt0,
        "mu": format_half(mu_of(cfg)),
        "l": args.l,
        "alpha": list(alpha),
        "beta": list(beta),
        "n": occ["n"],
        "n_tilde": occ["n_tilde"],
        "c": occ["c"],
        "mu_sigma": format_half(mu_sigma(occ["n"], occ["n_tilde"])),
    }

    def render(o):
        return (
            f"case {o['case']} towers ({o['dimV0']}; {o['dimVp0']}, {o['dimVt0']}), mu={o['mu']}\n"
            f"label ({o['alpha']}, {o['beta']}) of rank {o['l']}: "
            f"n={o['n']}  n_tilde={o['n_tilde']}  c={o['c']}  mu_sigma={o['mu_sigma']}"
        )

    _emit(args, obj, render)
    return 0


def cmd_conservation_scan(args) -> int:
    cfg = _tower_config(args)
    rows = []
    all_zero = True
    for l in range(args.lmax + 1):
        for alpha, beta in bipartitions(l):
            rep = conservation_check(alpha, beta, l, cfg)
            all_zero = all_zero and rep["residual_double_c"] == 0
            rows.append(
                {
                    "l": l,
                    "alpha": list(alpha),
                    "beta": list(beta),
                    "n": rep["n"],
                    "n_tilde": rep["n_tilde"],
                    "c": rep["c"],
                    "rhs": rep["rhs"],
                    "residual_double_c": rep["residual_double_c"],
                    "residual_single_c": rep["residual_single_c"],
                }
            )
    obj = {
        "case": cfg.case.tag,
        "dimV0": cfg.dimV0,
        "dimVp0": cfg.dimVp0,
        "dimVt0": cfg.dimVt0,
        "mu": format_half(mu_of(cfg)),
        "rows": rows,
        "all_double_c_residuals_zero": all_zero,
    }

    def render(o):
        lines = [
            f"case {o['case']} towers ({o['dimV0']}; {o['dimVp0']}, {o['dimVt0']}), mu={o['mu']}",
            f"{'l':>2} {'alpha':<12} {'beta':<12} {'n':>3} {'nt':>3} {'c':>3} {'rhs':>4} {'r2c':>4} {'r1c':>4}",
        ]
        for r in o["rows"]:
            lines.append(
                f"{r['l']:>2} {str(r['alpha']):<12} {str(r['beta']):<12} {r['n']:>3} "
                f"{r['n_tilde']:>3} {r['c']:>3} {r['rhs']:>4} "
                f"{r['residual_double_c']:>4} {r['residual_single_c']:>4}"
            )
        lines.append("all double-c residuals zero" if o["all_double_c_residuals_zero"] else "NONZERO residual found")
        return "\n".join(lines)

    _emit(args, obj, render)
    return 0 if all_zero else 1


def cmd_specialize_decompose(args) -> int:
    module = ThetaModule(args.l, args.lprime, as_half(args.mu))
    rep = GroupRepAtOne(module)
    rep.check_group_relations()
    mults = decompose(rep.character(), args.l, args.lprime)
    expected = expected_decomposition(args.l, args.lprime)
    matches = mults == expected
    obj = {
        "l": args.l,
        "lprime": args.lprime,
        "dimension": module.dim,
        "grades": module.grade_dims(),
        "multiplicities": [
            {
                "left": [list(ab[0]), list(ab[1])],
                "right": [list(apbp[0]), list(apbp[1])],
                "mult": m,
            }
            for (ab, apbp), m in sorted(mults.items())
        ],
        "matches_expected": matches,
    }

    def render(o):
        lines = [f"specialized module at ranks ({o['l']},{o['lprime']}), dimension {o['dimension']}"]
        lines += [f"  {t['left']} (x) {t['right']}  x{t['mult']}" for t in o["multiplicities"]]
        lines.append("matches predicted decomposition" if o["matches_expected"] else "MISMATCH")
        return "\n".join(lines)

    _emit(args, obj, render)
    return 0 if matches else 1


def cmd_coset(args) -> int:
    if (args.l is None) == (args.lprime is None):
        raise ValueError("give exactly one of --l (plain block) or --lprime (mixed block)")
    kind, n = ("sym_block", args.l) if args.l is not None else ("mixed_block", args.lprime)
    ks = [args.k] if args.k is not None else list(range(n + 1))
    tables = []
    for k in ks:
        reps = distinguished_reps(CosetSpec(kind, n, k))
        tables.append(
            {
                "kind": kind,
                "n": n,
                "k": k,
                "count": len(reps),
                "reps": [{"perm": list(w), "length": length(w)} for w in reps],
            }
        )
    obj = {"tables": tables}

    def render(o):
        lines = []
        for t in o["tables"]:
            lines.append(f"{t['kind']} n={t['n']} k={t['k']}: {t['count']} representatives")
            lines += [f"  {r['perm']}  length {r['length']}" for r in t["reps"]]
        return "\n".join(lines)

    _emit(args, obj, render)
    return 0


def _parse_hecke_word(text: str, params: HeckeParams) -> HeckeElem:
    elem = HeckeElem.unit(params.rank)
    for token in text.replace(",", " ").split():
        if token == "e":
            continue
        if token == "t":
            g = params.rank
        elif token.startswith("s") and token[1:].isdigit():
            g = int(token[1:])
            if not 1 <= g < params.rank:
                raise ValueError(f"swap index out of range in token {token!r}")
        else:
            raise ValueError(f"bad generator token {token!r} (expected s<i>, t or e)")
        elem = he_mul(params, elem, gen_elem(params, g))
    return elem


def cmd_hecke_mul(args) -> int:
    params = HeckeParams.signed(args.l, as_half(args.mu))
    a = _parse_hecke_word(args.a, params)
    b = _parse_hecke_word(args.b, params)
    prod = he_mul(params, a, b)
    obj = {
        "l": args.l,
        "mu": format_half(params.flip_exponent),
        "a": args.a,
        "b": args.b,
        "product": prod.to_json_obj(),
    }

    def render(o):
        lines = [f"product in the rank-{o['l']} algebra at mu={o['mu']}:"]
        lines += [f"  {t['perm']}: {t['poly']}" for t in o["product"]] or ["  0"]
        return "\n".join(lines)

    _emit(args, obj, render)
    return 0


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thetahecke",
        description="Exact computations in the graded Hecke bimodule and its combinatorial shadow.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p):
        p.add_argument("--format", choices=["json", "text"], default="json")
        p.add_argument("--jobs", type=int, default=0, help="worker processes (0 = auto)")

    p = sub.add_parser("module-verify", help="check every defining relation of the bimodule")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--lprime", type=int, required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--case", choices=sorted(CASES))
    add_common(p)
    p.set_defaults(func=cmd_module_verify)

    p = sub.add_parser("theta-lift", help="lift a labeled representation across ranks")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--lprime", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_theta_lift)

    def add_tower(p):
        p.add_argument("--case", choices=sorted(CASES), required=True)
        p.add_argument("--dimV0", type=int, required=True)
        p.add_argument("--dimVp0", type=int, required=True)
        p.add_argument("--chi-minus-one", type=int, choices=[1, -1], default=None)

    p = sub.add_parser("first-occurrence", help="first-occurrence indices in both towers")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--l", type=int, required=True)
    add_tower(p)
    add_common(p)
    p.set_defaults(func=cmd_first_occurrence)

    p = sub.add_parser("conservation-scan", help="conservation residuals over all labels up to a rank")
    p.add_argument("--lmax", type=int, required=True)
    add_tower(p)
    add_common(p)
    p.set_defaults(func=cmd_conservation_scan)

    p = sub.add_parser("specialize-decompose", help="decompose the specialized module at nu=1")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--lprime", type=int, required=True)
    p.add_argument("--mu", default="1/2")
    add_common(p)
    p.set_defaults(func=cmd_specialize_decompose)

    p = sub.add_parser("coset", help="distinguished coset representative tables")
    p.add_argument("--l", type=int, help="plain-block subgroup of the symmetric group")
    p.add_argument("--lprime", type=int, help="mixed-block subgroup of the signed group")
    p.add_argument("--k", type=int, default=None)
    add_common(p)
    p.set_defaults(func=cmd_coset)

    p = sub.add_parser("hecke-mul", help="multiply two words in the signed Hecke algebra")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    add_common(p)
    p.set_defaults(func=cmd_hecke_mul)

    return parser


# flags whose values may begin with a dash (negative half-integers and words);
# argparse only waves through bare negative integers, so fold these into
# --flag=value form before parsing
_VALUE_FLAGS = {"--mu", "--a", "--b", "--alpha", "--beta", "--chi-minus-one"}


def _merge_dash_values(argv: list[str]) -> list[str]:
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if tok in _VALUE_FLAGS and nxt is not None and nxt.startswith("-") and nxt != "-":
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_merge_dash_values(argv))
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
