"""Command-line front end.

Exit codes: 0 success, 1 usage, 2 parse error, 3 capacity exceeded,
4 budget exhausted, 5 verification failure. The solver time budget comes
from --budget, else the BECKRING_BUDGET environment variable, else 60 s.
"""

from __future__ import annotations

import argparse
import json
import sys

from .dsl import ProductExpr, elaborate, parse, print_expr, ring_of
from .errors import EXIT_OK, EXIT_USAGE, EXIT_VERIFY, BeckringError
from .graphs import build_graph, export_graph
from .report import analyze, render_report
from .rings import DEFAULT_SIZE_CAP, make_product
from .solvers import chromatic_number, max_clique
from .theorems import (
    DEFAULT_DIRECT_CAP,
    chi_bounds,
    counterexample_family,
    omega_product_formula,
    zn_formula,
)
from .verify import run_suite


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _add_common(p: _Parser):
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--budget", type=float, default=None, help="solver time budget in seconds")
    p.add_argument("--max-size", type=int, default=None, help="override the ring size cap")
    p.add_argument("--s-mode", choices=["any", "min"], default="any",
                   help="pick s from any optimal coloring or minimize it")


def build_parser() -> _Parser:
    parser = _Parser(prog="beckring", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full invariant report for a ring expression")
    p.add_argument("expr")
    _add_common(p)

    p = sub.add_parser("predict-omega", help="product clique formula vs direct solve")
    p.add_argument("expr")
    _add_common(p)

    p = sub.add_parser("bound-chi", help="chromatic bounds of a product")
    p.add_argument("expr")
    _add_common(p)

    p = sub.add_parser("zn", help="closed form for Z_N vs direct solve")
    p.add_argument("n", type=int)
    _add_common(p)

    p = sub.add_parser("counterexample", help="clique/chromatic gap of the built-in family")
    p.add_argument("factors", nargs="*", help="reduced factor expressions")
    _add_common(p)

    p = sub.add_parser("export", help="write the Beck graph in DIMACS or JSON form")
    p.add_argument("expr")
    p.add_argument("--format", choices=["dimacs", "json"], default="dimacs")
    p.add_argument("--output", default=None, help="output path (default stdout)")
    _add_common(p)

    p = sub.add_parser("verify-suite", help="run the catalog property suite")
    _add_common(p)

    return parser


def _emit(payload: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _size_cap(args) -> int:
    return args.max_size if args.max_size is not None else DEFAULT_SIZE_CAP


def _s_mode(args) -> str:
    return "min_s" if args.s_mode == "min" else "any_optimal"


def _cmd_analyze(args) -> int:
    report = analyze(args.expr, budget=args.budget, s_mode=_s_mode(args), size_cap=_size_cap(args))
    _emit(report, args.json, render_report(report))
    return EXIT_OK if all(c["pass"] for c in report["checks"]) else EXIT_VERIFY


def _cmd_predict_omega(args) -> int:
    ast = parse(args.expr)
    if not isinstance(ast, ProductExpr) or len(ast.atoms) < 2:
        raise _UsageError("predict-omega needs a product of at least two factors")
    cap = _size_cap(args)
    factors = [elaborate(a, size_cap=cap) for a in ast.atoms]
    pred = omega_product_formula(factors, args.budget)
    direct = None
    if pred.product_size <= DEFAULT_DIRECT_CAP:
        direct = max_clique(build_graph(make_product(factors, size_cap=cap)), args.budget).size
    ok = direct is None or direct == pred.predicted
    payload = {
        "ring": print_expr(ast),
        "factors": [
            {"ring": print_expr(a), "omega": om, "B": b, "C": c}
            for a, (om, b, c) in zip(ast.atoms, pred.per_factor)
        ],
        "predicted_omega": pred.predicted,
        "direct_omega": direct,
        "pass": ok,
    }
    lines = [f"ring {payload['ring']}"]
    for f in payload["factors"]:
        lines.append(f"  factor {f['ring']}: omega={f['omega']} |B|={f['B']} |C|={f['C']}")
    lines.append(f"predicted omega = {pred.predicted}")
    lines.append(
        f"direct omega = {direct} ... {'PASS' if ok else 'FAIL'}"
        if direct is not None
        else "direct solve skipped (product too large)"
    )
    _emit(payload, args.json, "\n".join(lines))
    return EXIT_OK if ok else EXIT_VERIFY


def _cmd_bound_chi(args) -> int:
    ast = parse(args.expr)
    atoms = ast.atoms if isinstance(ast, ProductExpr) else (ast,)
    cap = _size_cap(args)
    factors = [elaborate(a, size_cap=cap) for a in atoms]
    bounds = chi_bounds(factors, _s_mode(args), args.budget)
    product = make_product(factors, size_cap=cap) if len(factors) > 1 else factors[0]
    exact = None
    if product.size <= DEFAULT_DIRECT_CAP:
        exact, _ = chromatic_number(build_graph(product), args.budget)
    ok = exact is None or bounds.lower <= exact <= bounds.upper
    payload = {
        "ring": print_expr(ast),
        "s_mode": bounds.s_mode,
        "factors": [
            {"ring": print_expr(a), "chi": f.chi, "s": f.s, "s_exact": f.s_exact}
            for a, f in zip(atoms, bounds.factors)
        ],
        "lower": bounds.lower,
        "upper": bounds.upper,
        "exact_chi": exact,
        "pass": ok,
    }
    lines = [f"ring {payload['ring']} (s-mode {bounds.s_mode})"]
    for f in payload["factors"]:
        note = "" if f["s_exact"] else " (achieved, not proven minimal)"
        lines.append(f"  factor {f['ring']}: chi={f['chi']} s={f['s']}{note}")
    lines.append(f"bounds: {bounds.lower} <= chi <= {bounds.upper}")
    if exact is not None:
        lines.append(f"exact chi = {exact} ... {'PASS' if ok else 'FAIL'}")
    else:
        lines.append("exact chi skipped (product too large)")
    _emit(payload, args.json, "\n".join(lines))
    return EXIT_OK if ok else EXIT_VERIFY


def _cmd_zn(args) -> int:
    res = zn_formula(args.n)
    g = build_graph(ring_of(f"Z{args.n}", size_cap=_size_cap(args)))
    omega = max_clique(g, args.budget).size
    chi, _ = chromatic_number(g, args.budget)
    ok = res.value == omega == chi
    payload = {
        "n": args.n,
        "factorization": [[p, e] for p, e in res.factorization],
        "formula": res.value,
        "omega": omega,
        "chi": chi,
        "pass": ok,
    }
    text = (
        f"Z{args.n}: formula {res.value}, solver omega {omega}, solver chi {chi}"
        f" ... {'PASS' if ok else 'FAIL'}"
    )
    _emit(payload, args.json, text)
    return EXIT_OK if ok else EXIT_VERIFY


def _cmd_counterexample(args) -> int:
    cap = _size_cap(args)
    factors = [elaborate(parse(t), size_cap=cap) for t in args.factors]
    rep = counterexample_family(factors, args.budget)
    ok = rep.gap == 1 and rep.constructed_colors == rep.chi_lower and (
        rep.direct_omega is None or rep.direct_omega == rep.omega
    )
    payload = {
        "an_variant": rep.an_variant,
        "factors": list(rep.factor_names),
        "size": rep.product_size,
        "omega": rep.omega,
        "chi": rep.chi,
        "gap": rep.gap,
        "chi_lower": rep.chi_lower,
        "constructed_colors": rep.constructed_colors,
        "direct_omega": rep.direct_omega,
        "pass": ok,
    }
    label = "AN" + ("".join(f" x {n}" for n in rep.factor_names))
    lines = [
        f"ring {label}: {rep.product_size} elements",
        f"omega = {rep.omega}" + (f" (direct solve {rep.direct_omega})" if rep.direct_omega is not None else ""),
        f"chi = {rep.chi} (lower bound {rep.chi_lower} = constructed coloring {rep.constructed_colors})",
        f"gap chi - omega = {rep.gap} ... {'PASS' if ok else 'FAIL'}",
    ]
    _emit(payload, args.json, "\n".join(lines))
    return EXIT_OK if ok else EXIT_VERIFY


def _cmd_export(args) -> int:
    ring = elaborate(parse(args.expr), size_cap=_size_cap(args))
    text = export_graph(build_graph(ring), args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as f:
            f.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def _cmd_verify_suite(args) -> int:
    result = run_suite(max_size=args.max_size, budget=args.budget, progress=None if args.json else print)
    if args.json:
        payload = {
            "checks": [
                {"name": c.name, "passed": c.passed, "failed": c.failed, "failures": c.failures}
                for c in result.checks
            ],
            "pass": result.ok,
        }
        print(json.dumps(payload, indent=2))
    else:
        for c in result.checks:
            for f in c.failures[:5]:
                print(f"    failing instance: {f}")
        print("suite: " + ("ALL PASS" if result.ok else "FAILURES PRESENT"))
    return EXIT_OK if result.ok else EXIT_VERIFY


_COMMANDS = {
    "analyze": _cmd_analyze,
    "predict-omega": _cmd_predict_omega,
    "bound-chi": _cmd_bound_chi,
    "zn": _cmd_zn,
    "counterexample": _cmd_counterexample,
    "export": _cmd_export,
    "verify-suite": _cmd_verify_suite,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BeckringError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
