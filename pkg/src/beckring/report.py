"""Full analysis reports with re-verified witnesses and theorem checks.

The JSON schema is fixed, with stable key order for diff-ability:

    {ring, size, local, reduced, units, zero_divisors,
     nilradical: {size, index, power_sizes},
     omega: {value, witness}, chi: {value, classes},
     split: {B, C}, s, checks: [{name, expected, actual, pass}]}

Witness elements are rendered in coordinate-tuple form, never as raw
indices.
"""

from __future__ import annotations

from .dsl import ProductExpr, ZmodAtom, elaborate, parse, print_expr
from .errors import InternalCheckError
from .graphs import build_graph
from .rings import DEFAULT_SIZE_CAP, field_factor_count
from .solvers import (
    best_clique_split,
    chromatic_number,
    max_clique,
    min_s_optimal_coloring,
    s_of,
    verify_clique,
    verify_coloring,
)
from .theorems import (
    an_condition_for,
    chi_bounds,
    classify_nil_factor,
    omega_product_formula,
    zn_formula,
)


def _check(name: str, expected, actual, ok: bool) -> dict:
    return {"name": name, "expected": expected, "actual": actual, "pass": bool(ok)}


def analyze(
    expr_text: str,
    budget: float | None = None,
    s_mode: str = "any_optimal",
    size_cap: int = DEFAULT_SIZE_CAP,
) -> dict:
    """Analyze the ring denoted by `expr_text` and return the report dict."""
    ast = parse(expr_text)
    ring = elaborate(ast, size_cap=size_cap)
    g = build_graph(ring, size_cap=size_cap)

    clique = max_clique(g, budget)
    if s_mode in ("min", "min_s"):
        coloring, sz = min_s_optimal_coloring(g, budget)
        chi_val, s_val = coloring.k, sz.s
    else:
        chi_val, coloring = chromatic_number(g, budget)
        s_val = s_of(g, coloring).s
    split = best_clique_split(g, budget)

    if not verify_clique(g, clique.vertices):
        raise InternalCheckError("clique witness failed re-verification")
    if not verify_clique(g, split.clique.vertices):
        raise InternalCheckError("split witness failed re-verification")
    if not verify_coloring(g, coloring):
        raise InternalCheckError("coloring witness failed re-verification")

    profile = ring.nilradical()
    omega_val = clique.size

    checks = [_check("omega_le_chi", True, omega_val <= chi_val, omega_val <= chi_val)]
    if isinstance(ast, ZmodAtom):
        zn = zn_formula(ast.n)
        checks.append(_check("zn_formula_omega", zn.value, omega_val, zn.value == omega_val))
        checks.append(_check("zn_formula_chi", zn.value, chi_val, zn.value == chi_val))
    if ring.is_reduced():
        expect = field_factor_count(ring) + 1
        checks.append(_check("reduced_omega", expect, omega_val, expect == omega_val))
        checks.append(_check("reduced_chi", expect, chi_val, expect == chi_val))
    if ring.size >= 2:
        # the nilpotency-index bound presumes a nonzero ring
        nil = classify_nil_factor(ring)
        bound = nil.power_size + (1 if nil.parity == "odd" else 0)
        checks.append(_check("nilradical_lower_bound", bound, omega_val, omega_val >= bound))
        condition = an_condition_for(ring)
        if condition.holds:
            checks.append(
                _check(
                    "an_condition_equality",
                    bound,
                    omega_val,
                    omega_val == chi_val == bound,
                )
            )
    if isinstance(ast, ProductExpr):
        factors = [elaborate(a, size_cap=size_cap) for a in ast.atoms]
        pred = omega_product_formula(factors, budget)
        checks.append(
            _check("product_omega_formula", pred.predicted, omega_val, pred.predicted == omega_val)
        )
        bounds = chi_bounds(factors, s_mode, budget)
        checks.append(_check("chi_lower_bound", bounds.lower, chi_val, chi_val >= bounds.lower))
        checks.append(_check("chi_upper_bound", bounds.upper, chi_val, chi_val <= bounds.upper))

    els = ring.element_str
    return {
        "ring": print_expr(ast),
        "size": ring.size,
        "local": ring.is_local(),
        "reduced": ring.is_reduced(),
        "units": int(ring.unit_mask.sum()),
        "zero_divisors": int(ring.zero_divisor_mask.sum()),
        "nilradical": {
            "size": len(profile.ideal),
            "index": profile.index_of_nilpotency,
            "power_sizes": list(profile.power_sizes),
        },
        "omega": {"value": omega_val, "witness": [els(v) for v in clique.vertices]},
        "chi": {"value": chi_val, "classes": [[els(v) for v in cls] for cls in coloring.classes()]},
        "split": {"B": [els(v) for v in split.b_part], "C": [els(v) for v in split.c_part]},
        "s": s_val,
        "checks": checks,
    }


def render_report(report: dict) -> str:
    lines = [
        f"ring {report['ring']}: {report['size']} elements, "
        f"local={'yes' if report['local'] else 'no'}, reduced={'yes' if report['reduced'] else 'no'}",
        f"units {report['units']}, zero-divisors {report['zero_divisors']}",
        "nilradical size {size}, index {index}, power sizes {power_sizes}".format(**report["nilradical"]),
        f"omega = {report['omega']['value']}, witness {{{', '.join(report['omega']['witness'])}}}",
        f"chi = {report['chi']['value']}",
    ]
    for i, cls in enumerate(report["chi"]["classes"]):
        lines.append(f"  class {i}: {{{', '.join(cls)}}}")
    lines.append(
        f"split |B|={len(report['split']['B'])} |C|={len(report['split']['C'])}: "
        f"B={{{', '.join(report['split']['B'])}}} C={{{', '.join(report['split']['C'])}}}"
    )
    lines.append(f"s = {report['s']}")
    for chk in report["checks"]:
        verdict = "PASS" if chk["pass"] else "FAIL"
        lines.append(
            f"check {chk['name']}: expected {chk['expected']}, actual {chk['actual']} ... {verdict}"
        )
    return "\n".join(lines)
