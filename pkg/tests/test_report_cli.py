"""Analysis reports, JSON schema stability, CLI behavior, and exit codes."""

import json

import pytest

from beckring.cli import main
from beckring.report import analyze, render_report
from beckring.verify import run_suite
from beckring import make_structure_ring, make_zmod
from beckring.errors import NotARingError

EXPECTED_KEYS = [
    "ring",
    "size",
    "local",
    "reduced",
    "units",
    "zero_divisors",
    "nilradical",
    "omega",
    "chi",
    "split",
    "s",
    "checks",
]


def test_analyze_z12_fields():
    rep = analyze("Z12")
    assert list(rep) == EXPECTED_KEYS
    assert rep["ring"] == "Z12"
    assert rep["size"] == 12
    assert rep["local"] is False and rep["reduced"] is False
    assert rep["units"] == 4 and rep["zero_divisors"] == 7
    assert rep["nilradical"] == {"size": 2, "index": 2, "power_sizes": [2, 1]}
    assert rep["omega"]["value"] == 3
    assert rep["chi"]["value"] == 3
    assert rep["s"] == 2
    assert all(c["pass"] for c in rep["checks"])


def test_analyze_an_report():
    rep = analyze("AN")
    assert rep["omega"]["value"] == 5
    assert rep["chi"]["value"] == 6
    assert rep["local"] is True
    assert rep["units"] == 16
    assert all(c["pass"] for c in rep["checks"])


def test_analyze_witnesses_in_tuple_form():
    rep = analyze("Z2 x Z2")
    assert rep["omega"]["witness"] == ["(0,0)", "(1,0)", "(0,1)"]
    for cls in rep["chi"]["classes"]:
        for el in cls:
            assert el.startswith("(") and el.endswith(")")


def test_analyze_json_round_trip():
    for expr in ("Z12", "Z4 x Z3", "AN", "Z2[t]/(t^2)"):
        rep = analyze(expr)
        assert json.loads(json.dumps(rep)) == rep


def test_analyze_product_checks_present():
    rep = analyze("Z4 x Z4")
    names = {c["name"] for c in rep["checks"]}
    assert "product_omega_formula" in names
    assert "chi_lower_bound" in names and "chi_upper_bound" in names
    assert all(c["pass"] for c in rep["checks"])


def test_analyze_min_s_mode():
    rep = analyze("Z4", s_mode="min_s")
    assert rep["s"] == 2


def test_render_report_mentions_key_numbers():
    text = render_report(analyze("Z12"))
    assert "omega = 3" in text
    assert "chi = 3" in text
    assert "PASS" in text and "FAIL" not in text


# -- CLI ----------------------------------------------------------------------


def test_cli_analyze_json(capsys):
    rc = main(["analyze", "Z12", "--json"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["omega"]["value"] == 3


def test_cli_analyze_text(capsys):
    rc = main(["analyze", "AN"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "omega = 5" in out and "chi = 6" in out


def test_cli_parse_error_exit_2(capsys):
    assert main(["analyze", "Z0"]) == 2
    assert "invalid modulus" in capsys.readouterr().err


def test_cli_capacity_exit_3(capsys):
    assert main(["analyze", "Z8192"]) == 3


def test_cli_budget_exit_4(capsys):
    assert main(["analyze", "Z60", "--budget", "0"]) == 4


def test_cli_usage_exit_1(capsys):
    assert main(["predict-omega", "Z2"]) == 1
    assert main(["frobnicate"]) == 1
    assert main(["zn"]) == 1


def test_cli_predict_omega(capsys):
    rc = main(["predict-omega", "Z4 x Z4"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "predicted omega = 4" in out and "PASS" in out


def test_cli_predict_omega_triple(capsys):
    rc = main(["predict-omega", "Z2 x Z2 x Z2"])
    assert rc == 0
    assert "predicted omega = 4" in capsys.readouterr().out


def test_cli_bound_chi(capsys):
    rc = main(["bound-chi", "Z8 x Z8", "--s-mode", "min"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "5 <= chi <= 6" in out and "exact chi = 6" in out


def test_cli_zn(capsys):
    rc = main(["zn", "72"])
    assert rc == 0
    assert "formula 7, solver omega 7, solver chi 7 ... PASS" in capsys.readouterr().out


def test_cli_counterexample(capsys):
    rc = main(["counterexample", "Z2"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "gap chi - omega = 1 ... PASS" in out


def test_cli_export_stdout(capsys):
    rc = main(["export", "Z4", "--format", "dimacs"])
    assert rc == 0
    assert capsys.readouterr().out == "p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n"


def test_cli_export_file(tmp_path, capsys):
    path = tmp_path / "z2.dimacs"
    rc = main(["export", "Z2", "--format", "dimacs", "--output", str(path)])
    assert rc == 0
    data = path.read_bytes()
    assert data == b"p edge 2 1\ne 1 2\n"
    assert b"\r" not in data


def test_cli_export_json_format(capsys):
    rc = main(["export", "Z4", "--format", "json"])
    assert rc == 0
    assert json.loads(capsys.readouterr().out) == {"n": 4, "edges": [[0, 1], [0, 2], [0, 3]]}


def test_cli_verify_suite_restricted(capsys):
    rc = main(["verify-suite", "--max-size", "16"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "suite: ALL PASS" in out


def test_cli_env_budget(monkeypatch, capsys):
    monkeypatch.setenv("BECKRING_BUDGET", "0")
    assert main(["analyze", "Z60"]) == 4


def test_cli_flag_overrides_env_budget(monkeypatch, capsys):
    monkeypatch.setenv("BECKRING_BUDGET", "0")
    assert main(["analyze", "Z60", "--budget", "30"]) == 0


# -- suite failure surfaces -----------------------------------------------------


def _broken_catalog():
    # u*u = v, u*v = 1, v*v = 0 is not associative; validation is deferred so
    # the suite trips over it instead of the constructor
    bad = make_structure_ring(
        (2, 2, 2),
        (1, 0, 0),
        {
            (0, 0): (1, 0, 0),
            (0, 1): (0, 1, 0),
            (0, 2): (0, 0, 1),
            (1, 1): (0, 0, 1),
            (1, 2): (1, 0, 0),
            (2, 2): (0, 0, 0),
        },
        validation_cap=0,
    )
    return {"Z4": make_zmod(4), "bad": bad}


def test_suite_surfaces_not_a_ring():
    result = run_suite(max_size=16, rings=_broken_catalog())
    assert not result.ok
    axioms = next(c for c in result.checks if c.name == "ring_axioms")
    assert axioms.failed == 1
    assert "bad" in axioms.failures[0]


def test_suite_exit_5_through_cli(monkeypatch, capsys):
    import beckring.verify as verify_mod

    monkeypatch.setattr(verify_mod, "catalog_rings", _broken_catalog)
    rc = main(["verify-suite", "--max-size", "16"])
    assert rc == 5
    assert "FAILURES PRESENT" in capsys.readouterr().out


def test_broken_ring_validation_names_axiom():
    with pytest.raises(NotARingError) as exc:
        _broken_catalog()["bad"].validate()
    assert exc.value.axiom in ("associativity", "distributivity")
