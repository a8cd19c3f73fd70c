import json
import subprocess
import sys

import pytest

from padic_stark.cli import (
    EXIT_FAIL,
    EXIT_GUARDRAIL,
    EXIT_INPUT,
    EXIT_OK,
    EXIT_UNKNOWN,
    EXIT_USAGE,
    main,
    read_config,
    write_config,
)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def test_gamma(capsys):
    code, out, _ = run(capsys, "gamma", "--prime", "7", "--at", "3/1")
    assert code == EXIT_OK
    assert out["report"]["signed_residue"] == -2
    assert out["command"] == "gamma" and out["pass"]


def test_ideal_filtration(capsys):
    code, out, _ = run(capsys, "ideal-filtration", "--group", "3,3", "--n", "2")
    assert code == EXIT_OK
    assert out["report"]["invariant_factors"] == [3, 3, 3]


def test_theta(capsys):
    code, out, _ = run(capsys, "theta", "--modulus", "5", "--S", "5", "--T", "7")
    assert code == EXIT_OK
    assert out["report"]["interpolation"] and out["report"]["in_I^n"]


def test_refined_check_both_calibrations(capsys):
    for cal in ("arithmetic-frobenius/inverse-unit", "arithmetic-frobenius/direct-unit"):
        code, out, _ = run(capsys, "refined-check", "--modulus", "4", "--S", "2", "--T", "3", "--calibration", cal)
        assert code == EXIT_OK and out["report"]["calibration"] == cal


def test_verify_iq(capsys):
    code, out, _ = run(capsys, "verify-iq", "--disc", "-4", "--prime", "5", "--prec", "12")
    assert code == EXIT_OK and out["pass"]


def test_lp_and_ferrero_greenberg(capsys):
    code, out, _ = run(capsys, "lp", "--chi-modulus", "3", "--prime", "7", "--prec", "8")
    assert code == EXIT_OK
    assert out["report"]["L_p'(0)"]["valuation"] == 1
    code, out, _ = run(capsys, "verify-ferrero-greenberg", "--chi-modulus", "4", "--prime", "5", "--prec", "8")
    assert code == EXIT_OK


def test_gauss_and_gross_koblitz(capsys):
    code, out, _ = run(capsys, "gauss", "--prime", "5", "--N", "3", "-a", "1", "--prec", "6")
    assert code == EXIT_OK and out["report"]["f"] == 2
    code, out, _ = run(capsys, "gross-koblitz", "--prime", "3", "--N", "13", "--prec", "6")
    assert code == EXIT_OK and len(out["report"]["instances"]) == 12


def test_eisenstein_check_reports_failing_sign(capsys):
    code, out, _ = run(capsys, "eisenstein-check", "--chi-modulus", "3", "--prime", "7", "--qmax", "42", "--prec", "8")
    assert code == EXIT_FAIL
    rep = out["report"]
    assert rep["constant_terms_cancel"]
    assert all(t["agreement"] >= 8 for t in rep["T"])
    assert rep["U_p_realized"]["agreement"] >= 8
    assert rep["l_invariant"]["condition_holds"]


def test_usage_errors(capsys):
    assert run(capsys, "gamma", "--prime", "7")[0] == EXIT_USAGE
    assert run(capsys, "gamma", "--prime", "seven", "--at", "1")[0] == EXIT_USAGE
    assert run(capsys)[0] == EXIT_USAGE


def test_unknown_subcommand(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == EXIT_UNKNOWN
    assert json.loads(err)["error"] == "unknown subcommand"


def test_guardrails(capsys):
    assert run(capsys, "gamma", "--prime", "7", "--at", "1", "--prec", "500")[0] == EXIT_GUARDRAIL
    assert run(capsys, "ideal-filtration", "--group", "64,64", "--n", "2")[0] == EXIT_GUARDRAIL
    assert run(capsys, "eisenstein-check", "--chi-modulus", "3", "--prime", "7", "--qmax", "10000")[0] == EXIT_GUARDRAIL


def test_input_errors(capsys):
    assert run(capsys, "gamma", "--prime", "7", "--at", "1/7")[0] == EXIT_INPUT
    assert run(capsys, "theta", "--modulus", "4", "--S", "2", "--T", "2")[0] == EXIT_INPUT
    assert run(capsys, "lp", "--chi-modulus", "5", "--prime", "7")[0] == EXIT_INPUT


def test_config_round_trip(tmp_path):
    cfg = {"prime": 7, "at": "3/1", "prec": 6, "pretty": True}
    path = tmp_path / "run.cfg"
    write_config(cfg, str(path))
    assert read_config(str(path)) == cfg


def test_config_precedence(tmp_path, capsys, monkeypatch):
    path = tmp_path / "run.cfg"
    path.write_text("# gamma run\nprime = 7\nat = 3/1\nprec = 5\n")
    monkeypatch.setenv("PADIC_STARK_PREC", "9")
    _, out, _ = run(capsys, "gamma", "--config", str(path))
    assert out["report"]["prec"] == 5
    _, out, _ = run(capsys, "gamma", "--config", str(path), "--prec", "4")
    assert out["report"]["prec"] == 4
    _, out, _ = run(capsys, "gamma", "--prime", "7", "--at", "3/1")
    assert out["report"]["prec"] == 9


def test_bad_config_key(tmp_path, capsys):
    path = tmp_path / "bad.cfg"
    path.write_text("colour = blue\n")
    assert run(capsys, "gamma", "--config", str(path))[0] == EXIT_INPUT


def test_output_file_and_determinism(tmp_path, capsys):
    path = tmp_path / "out.json"
    main(["theta", "--modulus", "12", "--S", "2,3", "--T", "5", "--output", str(path)])
    first = capsys.readouterr().out
    main(["theta", "--modulus", "12", "--S", "2,3", "--T", "5"])
    assert capsys.readouterr().out == first
    assert path.read_text() == first


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "padic_stark", "ideal-filtration", "--group", "4", "--n", "3"],
                       capture_output=True, text=True, check=False)
    assert r.returncode == 0
    assert json.loads(r.stdout)["report"]["invariant_factors"] == [4]


@pytest.mark.parametrize("flag", ["--help"])
def test_help_exits_cleanly(capsys, flag):
    assert main([flag]) == EXIT_OK
