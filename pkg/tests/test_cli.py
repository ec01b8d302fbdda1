import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from rootpoly import cli
from rootpoly.exactnum import coeff_from_json
from rootpoly.laurent import DivisionError, LaurentPoly
from rootpoly.orthopoly import ortho_poly
from rootpoly.rootdata import build_root_system
from rootpoly.verify import CheckResult


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_jacobi_example():
    code, out, _ = run("jacobi", "--type", "A1", "--k", "1", "--lambda", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["coeffs"] == [{"mu": [0], "c": "1"}, {"mu": [2], "c": "1"}]
    assert data["lambda"] == [2] and data["norm"] == "2" and data["eigenvalue"] == "8"


def test_rootinfo_c2():
    code, out, _ = run("rootinfo", "--type", "C2")
    assert code == 0
    assert len(json.loads(out)["positive_roots"]) == 4


def test_macdonald_roundtrip():
    code, out, _ = run("macdonald", "--type", "A1", "--k", "2", "--lambda", "2")
    assert code == 0
    data = json.loads(out)
    coeffs = {tuple(c["mu"]): coeff_from_json(c["c"]) for c in data["coeffs"]}
    assert coeffs == {mu: c for mu, c in ortho_poly(build_root_system("A1"), (2,), 2, "macdonald").coeffs.items()}
    assert data["eigenvalue"] is not None


def test_msym_json_roundtrip():
    code, out, _ = run("msym", "--type", "C2", "--lambda", "1,1")
    rs = build_root_system("C2")
    assert code == 0 and len(LaurentPoly.from_json(rs, json.loads(out))) == 8


def test_determinism():
    argv = ("gram", "--type", "C2", "--k", "1,2", "--max-height", "3")
    first = run(*argv)
    assert first == run(*argv)
    assert json.loads(first[1])["ok"]


def test_formats():
    code, out, _ = run("norm", "--type", "A1", "--k", "1", "--max-height", "2", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "lambda,norm,ratio,ct"
    code, out, _ = run("jacobi", "--type", "C2", "--k", "1", "--lambda", "0,1", "--format", "latex")
    assert code == 0 and out.startswith("\\begin{tabular}")


def test_dunkl_command():
    poly = json.dumps({"terms": [{"exp": [2], "coeff": "1"}, {"exp": [0], "coeff": "1"},
                                 {"exp": [-2], "coeff": "1"}]})
    code, out, _ = run("dunkl", "--op", "L", "--type", "A1", "--k", "1", "--poly", poly)
    assert code == 0
    rs = build_root_system("A1")
    assert LaurentPoly.from_json(rs, json.loads(out)) == LaurentPoly(rs, {(2,): 8, (0,): 8, (-2,): 8})
    code, out, _ = run("dunkl", "--op", "rational_dunkl", "--type", "A1", "--k", "1", "--xi", "1",
                       "--poly", json.dumps({"terms": [{"exp": [1], "coeff": "1/2"}]}))
    assert code == 0 and json.loads(out) == {"terms": [{"exp": [0], "coeff": "3"}]}


def test_poly_from_file(tmp_path):
    f = tmp_path / "p.json"
    f.write_text(json.dumps({"terms": [{"exp": [0, 0], "coeff": "1"}]}))
    code, out, _ = run("dunkl", "--op", "cherednik", "--type", "C2", "--k", "1,1", "--xi", "1,0",
                       "--poly", f"@{f}")
    assert code == 0
    assert json.loads(out)["terms"][0]["exp"] == [0, 0]


@pytest.mark.parametrize("argv", [
    ("bogus",),
    ("jacobi", "--type", "A1", "--k", "1"),
    ("jacobi", "--type", "Z3", "--k", "1", "--lambda", "1"),
    ("jacobi", "--type", "A1", "--k", "1", "--lambda", "-2"),
    ("jacobi", "--type", "A1", "--k", "1", "--lambda", "13"),
    ("gram", "--type", "A2", "--k", "1", "--max-height", "99"),
    ("dunkl", "--op", "L", "--type", "A1", "--k", "1", "--poly", "{not json"),
    ("dunkl", "--op", "L", "--type", "A1", "--k", "1",
     "--poly", json.dumps({"terms": [{"exp": [1], "coeff": "1"}]})),
    ("verify",),
    ("jacobi", "--format", "xml"),
])
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_consistency_failure_exit_3(monkeypatch):
    def broken(*args, **kwargs):
        raise DivisionError("remainder")

    monkeypatch.setattr(cli, "ortho_poly", broken)
    code, _, err = run("jacobi", "--type", "A1", "--k", "1", "--lambda", "2")
    assert code == 3 and "DivisionError" in err


def test_failed_verification_exit_3(monkeypatch):
    monkeypatch.setattr(cli.verify_mod, "ALL_CHECKS", [lambda: CheckResult(99, "fake", False, "x")])
    assert run("verify", "--all")[0] == 3
    monkeypatch.setattr(cli.verify_mod, "ALL_CHECKS", [lambda: CheckResult(99, "fake", True, "x")])
    assert run("verify", "--all")[0] == 0


def test_verify_single_criterion():
    code, out, _ = run("verify", "--criterion", "8")
    assert code == 0 and json.loads(out)["ok"]


def test_config_file_and_precedence(tmp_path):
    cfg = tmp_path / "rp.cfg"
    cfg.write_text("# caps\ntype = A1\nk = 2\nlam = 2\nmax_height = 1\n")
    code, out, _ = run("jacobi", "--config", str(cfg))
    assert code == 0
    assert json.loads(out)["coeffs"][0] == {"mu": [0], "c": "4/3"}
    code, out, _ = run("jacobi", "--config", str(cfg), "--k", "1")
    assert json.loads(out)["coeffs"][0] == {"mu": [0], "c": "1"}
    code, out, _ = run("norm", "--config", str(cfg))
    assert len(json.loads(out)["rows"]) == 2
    bad = tmp_path / "bad.cfg"
    bad.write_text("just words\n")
    assert run("jacobi", "--config", str(bad))[0] == 2


def test_cap_override(monkeypatch):
    assert run("jacobi", "--type", "A1", "--k", "1", "--lambda", "13")[0] == 2
    monkeypatch.setenv(cli.CAP_ENV, "14")
    assert run("jacobi", "--type", "A1", "--k", "1", "--lambda", "13")[0] == 0
    monkeypatch.setenv(cli.CAP_ENV, "lots")
    assert run("jacobi", "--type", "A1", "--k", "1", "--lambda", "2")[0] == 2


def test_eval1d_and_limits():
    code, out, _ = run("eval1d", "--function", "bessel", "--k", "0", "--x", "0")
    assert code == 0 and json.loads(out)["value"] == "1"
    code, out, _ = run("eval1d", "--function", "genexp", "--k", "0", "--x", "1")
    val = json.loads(out)["value"]
    assert abs(float(val["re"]) - 0.5403023058681398) < 1e-15
    assert abs(float(val["im"]) - 0.8414709848078965) < 1e-15
    code, out, _ = run("eval1d", "--function", "gegenbauer", "--k", "1", "--n", "2", "--x", "0.5")
    assert code == 0 and Fraction(json.loads(out)["value"]) == 0
    code, out, _ = run("limits", "--degree", "3")
    data = json.loads(out)
    assert code == 0 and all(r["equal"] for r in data["q_to_1"])
    assert float(data["bessel"][0]["gap"]) < 1e-3
    # floats carry 17 significant digits
    assert len(data["bessel"][1]["lhs"].replace("0.", "", 1)) == 17


def test_verify_commutators_small():
    code, out, _ = run("verify", "commutators", "--box", "1", "--degree", "2")
    assert code == 0 and json.loads(out)["ok"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rootpoly", "rootinfo", "--type", "A1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["type"] == "A1"
