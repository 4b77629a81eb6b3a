"""Command-line frontend.

Subcommands: nf, act, fock, integral, rmatrix-demo, rootdata, flag-demo,
verify.  Exit codes: 0 all checks pass, 1 verification failure, 2 usage
error.  JSON output serializes scalars as canonical strings and matrices
as row-major string arrays, under a versioned schema field.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path

from .scalar import ONE, ZERO, Scalar, q_pow, s_pow
from .ncpoly import NCExpr, disc
from .modalg import ExtElement, LaurentElement, gen_act, laurent_gen_act, GENS
from . import fock as fock_mod
from . import integral as integral_mod
from . import rmatrix
from . import rootdata
from . import flag as flag_mod
from .parser import (ParseError, parse_expression, disc_context, flag_context,
                     uqsl2_context, extended_context, laurent_context)
from .verify import Options, run_verify, suite_names

SCHEMA = 1


def _rational(text: str) -> Fraction:
    try:
        val = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")
    if not 0 < val < 1:
        raise argparse.ArgumentTypeError("q0 must lie strictly between 0 and 1")
    return val


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text)


# ---------------------------------------------------------------------------
# nf
# ---------------------------------------------------------------------------

def _cmd_nf(args) -> int:
    if args.algebra == "uqsl2":
        el = parse_expression(args.expr, uqsl2_context())
        out = str(el)
    else:
        ctx = disc_context() if args.algebra == "disc" else flag_context()
        p = disc() if args.algebra == "disc" else flag_mod.flag()
        el = parse_expression(args.expr, ctx)
        if isinstance(el, Scalar):
            el = NCExpr.one().scale(el)
        out = str(p.normal_form(el))
    _emit(args, {"schema": SCHEMA, "algebra": args.algebra,
                 "input": args.expr, "normal_form": out}, out)
    return 0


# ---------------------------------------------------------------------------
# act
# ---------------------------------------------------------------------------

_CARRIERS = ("holo", "laurent", "antiholo", "disc", "extended")


def _cmd_act(args) -> int:
    carrier = args.algebra
    if carrier in ("holo", "laurent"):
        ctx = laurent_context(allow_inverse=(carrier == "laurent"))
        el = parse_expression(args.expr, ctx)
        if not isinstance(el, LaurentElement):
            el = LaurentElement.mono(0, el)
        result = laurent_gen_act(args.generator, el)
    else:
        ctx = extended_context(with_f0=(carrier == "extended"))
        el = parse_expression(args.expr, ctx)
        if not isinstance(el, ExtElement):
            el = ExtElement.one().scale(el)
        if carrier == "antiholo" and any(a for (a, b) in el.pol):
            raise ParseError("not an antiholomorphic polynomial", 0)
        result = gen_act(args.generator, el)
    out = str(result)
    _emit(args, {"schema": SCHEMA, "carrier": carrier,
                 "generator": args.generator, "input": args.expr,
                 "result": out}, out)
    return 0


# ---------------------------------------------------------------------------
# fock
# ---------------------------------------------------------------------------

def _cmd_fock(args) -> int:
    el = parse_expression(args.expr, extended_context())
    if not isinstance(el, ExtElement):
        el = ExtElement.one().scale(el)
    m = fock_mod.fock_matrix(el, args.N)
    if args.q0 is not None:
        num = m.to_float_orthonormal(float(args.q0))
        rows = [[f"{v:.12g}" for v in row] for row in num.tolist()]
        mode = "numeric-orthonormal"
    else:
        rows = [[str(m.entries.get((i, j), ZERO))
                 for j in range(args.N + 1)] for i in range(args.N + 1)]
        mode = "exact-weighted"
    payload = {"schema": SCHEMA, "N": args.N, "mode": mode,
               "input": args.expr, "boundary": m.boundary, "matrix": rows}
    if args.q0 is not None:
        payload["q0"] = str(args.q0)
    text = "\n".join("  ".join(row) for row in rows)
    _emit(args, payload, text)
    return 0


# ---------------------------------------------------------------------------
# integral
# ---------------------------------------------------------------------------

def _cmd_integral(args) -> int:
    el = parse_expression(args.expr, extended_context())
    if not isinstance(el, ExtElement):
        el = ExtElement.one().scale(el)
    try:
        val = integral_mod.integral(el)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = {"schema": SCHEMA, "input": args.expr, "integral": str(val)}
    text = str(val)
    if args.q0 is not None:
        num = val.eval_at_q(args.q0, sqrt_digits=30)
        payload["at_q0"] = {"q0": str(args.q0), "value": str(num),
                            "float": float(num)}
        text += f"\n= {float(num):.12g} at q0 = {args.q0}"
    _emit(args, payload, text)
    return 0


# ---------------------------------------------------------------------------
# rmatrix-demo
# ---------------------------------------------------------------------------

def _cmd_rmatrix_demo(args) -> int:
    start = rmatrix.DiscTensor.pair((0, 1), (1, 0))
    twisted = rmatrix.cartan_twist(start)
    corrected = rmatrix.r_apply(start)
    braided = rmatrix.braid(start)
    rule = rmatrix.derived_rule()
    ok = rmatrix.matches_engine_presentation()
    steps = [
        ("start", "the crossing tensor", str(start)),
        ("twist", "Cartan part scales by q^(-w1 w2 / 2)", str(twisted)),
        ("correction", "nilpotent E-F term with weight (q^-1 - q)",
         str(corrected)),
        ("braid", "flip the legs", str(braided)),
        ("rule", "read off the rewrite rule for z* z", str(rule)),
        ("presentation", "derived rule equals the engine rule",
         "match" if ok else "MISMATCH"),
    ]
    payload = {"schema": SCHEMA,
               "steps": [{"step": s, "note": n, "value": v}
                         for s, n, v in steps],
               "passed": ok}
    text = "\n".join(f"[{s}] {n}\n    {v}" for s, n, v in steps)
    _emit(args, payload, text)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# rootdata
# ---------------------------------------------------------------------------

def _cmd_rootdata(args) -> int:
    try:
        c = rootdata.build(args.type, args.rank)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    pos = rootdata.positive_roots(c)
    top = rootdata.maximal_root(c)
    nodes = rootdata.l0_candidates(c)
    grads = {}
    for l0 in nodes:
        g = rootdata.gradation(c, l0)
        grads[str(l0)] = {
            "H": [str(h) for h in g.H],
            "dim_p_plus": g.dim_p_plus,
            "dim_k": g.dim_k,
            "dim_g": g.dim_g,
        }
    payload = {
        "schema": SCHEMA,
        "type": f"{args.type}{args.rank}",
        "cartan_matrix": [list(row) for row in c.matrix],
        "symmetrizers": list(c.d),
        "positive_roots": [list(r) for r in pos],
        "maximal_root": list(top),
        "parabolic_nodes": list(nodes),
        "gradations": grads,
    }
    lines = [f"type {args.type}{args.rank}: {len(pos)} positive roots",
             f"maximal root coefficients: {list(top)}",
             f"parabolic nodes: {list(nodes) or 'none'}"]
    for l0, g in grads.items():
        lines.append(f"  node {l0}: dim p+ = {g['dim_p_plus']}, "
                     f"dim k = {g['dim_k']}, dim g = {g['dim_g']}")
    _emit(args, payload, "\n".join(lines))
    return 0


# ---------------------------------------------------------------------------
# flag-demo
# ---------------------------------------------------------------------------

def _cmd_flag_demo(args) -> int:
    lx, ly, lw = flag_mod.y_commutation_chain()
    zp = flag_mod.Z_LOC * flag_mod.Z_PRIME
    pz = flag_mod.Z_PRIME * flag_mod.Z_LOC
    rows = []
    all_ok = True
    from .modalg import holo_gen_act
    for n in range(-4, 5):
        phi = flag_mod.z_loc_power(n).scale(s_pow(n))
        for gname in GENS:
            lhs = flag_mod.loc_act(gname, phi)
            rhs = flag_mod.LocElement(0, flag_mod.SphericalElement())
            for m, cf in holo_gen_act(gname, n).items():
                rhs = rhs + flag_mod.z_loc_power(m).scale(s_pow(m) * cf)
            ok = lhs == rhs
            all_ok = all_ok and ok
            rows.append({"n": n, "generator": gname,
                         "match": ok, "value": str(lhs)})
    chain_ok = (lx, ly, lw) == (q_pow(-2), ONE, q_pow(2))
    inverse_ok = zp == flag_mod.LocElement.one() == pz
    all_ok = all_ok and chain_ok and inverse_ok
    payload = {"schema": SCHEMA,
               "quasi_commutation": [str(lx), str(ly), str(lw)],
               "inverse_products": [str(zp), str(pz)],
               "action_match": rows,
               "passed": all_ok}
    lines = [f"y-commutation scalars: ({lx}, {ly}, {lw})",
             f"zl zl' = {zp}, zl' zl = {pz}",
             "action match on the embedded Laurent line:"]
    for r in rows:
        mark = "ok " if r["match"] else "FAIL"
        lines.append(f"  {mark} {r['generator']:>4} on n={r['n']:>2}: "
                     f"{r['value']}")
    _emit(args, payload, "\n".join(lines))
    return 0 if all_ok else 1


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _cmd_verify(args) -> int:
    if not args.suites:
        print("error: no suite selected; choose from: all, "
              + ", ".join(suite_names()), file=sys.stderr)
        return 2
    opts = Options(degree=args.degree, N=args.N, q0=args.q0, seed=args.seed)
    try:
        report = run_verify(args.suites, opts)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.figures is not None:
        from .figures import render_figures
        outdir = Path(args.figures)
        outdir.mkdir(parents=True, exist_ok=True)
        with open(outdir / "report.json", "w") as fh:
            json.dump(report, fh, indent=2)
        with open(outdir / "checks.csv", "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["suite", "name", "mode", "statement",
                             "passed", "witness", "seconds"])
            for r in report["checks"]:
                writer.writerow([r["suite"], r["name"], r["mode"],
                                 r["statement"], r["passed"], r["witness"],
                                 r["seconds"]])
        figures = render_figures(outdir, N=min(args.N, 24), q0=args.q0)
        report["figures"] = figures
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        for r in report["checks"]:
            mark = "PASS" if r["passed"] else "FAIL"
            print(f"{mark} {r['suite']}.{r['name']}: {r['statement']} "
                  f"[{r['witness']}]")
        c = report["counts"]
        print(f"{c['pass']} passed, {c['fail']} failed")
        if args.figures is not None:
            print(f"report, csv and figures written to {args.figures}")
    return 0 if report["passed"] else 1


# ---------------------------------------------------------------------------
# wiring
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="qdisc",
        description="exact computations on the quantum disc and its "
                    "representation theory")
    sub = top.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "text"), default="text",
                       help="output as JSON or readable text")

    p = sub.add_parser("nf", help="normal form of an expression")
    p.add_argument("expr")
    p.add_argument("--algebra", choices=("disc", "flag", "uqsl2"),
                   default="disc")
    add_format(p)
    p.set_defaults(func=_cmd_nf)

    p = sub.add_parser("act", help="apply a generator to an expression")
    p.add_argument("generator", choices=GENS)
    p.add_argument("expr")
    p.add_argument("--algebra", choices=_CARRIERS, default="disc",
                   help="carrier of the action")
    add_format(p)
    p.set_defaults(func=_cmd_act)

    p = sub.add_parser("fock", help="matrix of an element on the truncated basis")
    p.add_argument("expr")
    p.add_argument("--N", type=int, default=8, help="truncation index")
    p.add_argument("--q0", type=_rational, default=None,
                   help="evaluate numerically in the orthonormal basis")
    add_format(p)
    p.set_defaults(func=_cmd_fock)

    p = sub.add_parser("integral", help="invariant integral of a finite element")
    p.add_argument("expr")
    p.add_argument("--q0", type=_rational, default=None,
                   help="also evaluate at this rational q0")
    add_format(p)
    p.set_defaults(func=_cmd_integral)

    p = sub.add_parser("rmatrix-demo",
                       help="derive the disc relation from the braiding")
    add_format(p)
    p.set_defaults(func=_cmd_rmatrix_demo)

    p = sub.add_parser("rootdata", help="root system data for a simple type")
    p.add_argument("type", choices=("A", "B", "C", "D", "E", "F", "G"))
    p.add_argument("rank", type=int)
    p.add_argument("--format", choices=("json", "text"), default="json",
                   help="output as JSON (default) or readable text")
    p.set_defaults(func=_cmd_rootdata)

    p = sub.add_parser("flag-demo",
                       help="localization chain and Laurent action match")
    add_format(p)
    p.set_defaults(func=_cmd_flag_demo)

    p = sub.add_parser("verify", help="run named check suites")
    p.add_argument("suites", nargs="*",
                   help="suite names, or 'all'")
    p.add_argument("--degree", type=int, default=4)
    p.add_argument("--N", type=int, default=32)
    p.add_argument("--q0", type=_rational, default=Fraction(1, 4))
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the randomized property checks")
    p.add_argument("--figures", default=None, metavar="DIR",
                   help="write report.json, checks.csv and PNG figures here")
    add_format(p)
    p.set_defaults(func=_cmd_verify)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
