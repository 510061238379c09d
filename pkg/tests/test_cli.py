import json
import subprocess
import sys

from eqcrit.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip().startswith("{") else out


def test_pair_t42_golden(capsys):
    code, doc = run_cli(capsys, "pair", "--t", "42")
    assert code == 0
    assert doc["case"] == "Generic"
    assert [c[0] for c in doc["f"]["coeffs"]] == [
        "0", "-592704", "-444528", "0", "1"]
    g = [c[0] for c in doc["g"]["coeffs"]]
    assert g[4] == "-307935007631307/234256"
    assert g[0] == "-44982677376"
    assert g[2] == "107230600008/11"
    reals = [v[0] for v in doc["display"]["critical_values"]]
    assert any(abs(r - 197568.1975316542) < 1e-6 for r in reals)
    assert doc["verified"] == {"equicritical_exact": True, "inequivalent": True}


def test_pair_byte_stable(capsys):
    code1 = main(["pair", "--t", "42"])
    out1 = capsys.readouterr().out
    code2 = main(["pair", "--t", "42"])
    out2 = capsys.readouterr().out
    assert code1 == code2 == 0 and out1 == out2


def test_pair_symbolic_tokens(capsys):
    code, doc = run_cli(capsys, "pair", "--t", "rho", "--field", "q-sqrt3")
    assert code == 0 and doc["case"] == "Rho"
    code, doc = run_cli(capsys, "pair", "--t", "omega-rho", "--field", "q-zeta12")
    assert code == 0 and doc["case"] == "OmegaRho"
    code, doc = run_cli(capsys, "pair", "--t", "inf")
    assert code == 0 and doc["case"] == "TInfinity" and doc["t"] == "inf"


def test_pair_no_pair_exit_2(capsys):
    code, doc = run_cli(capsys, "pair", "--t", "omega", "--field", "q-omega")
    assert code == 2 and doc["status"] == "no-pair"


def test_pair_field_too_small_exit_1(capsys):
    code, doc = run_cli(capsys, "pair", "--t", "rho")
    assert code == 1 and doc["error"]["type"] == "FieldTooSmall"


def test_pair_pipeline_flag(capsys):
    code, doc = run_cli(capsys, "pair", "--t", "3", "--pipeline")
    assert code == 0
    code2, doc2 = run_cli(capsys, "pair", "--t", "3")
    assert doc["f"] == doc2["f"] and doc["g"] == doc2["g"]


def test_verify_roundtrip(tmp_path, capsys):
    out = tmp_path / "pair.json"
    code, _ = run_cli(capsys, "pair", "--t", "5/7", "--out", str(out))
    assert code == 0
    code, doc = run_cli(capsys, "verify", "--file", str(out))
    assert code == 0
    assert doc["equicritical"] is True
    assert doc["verdict"]["status"] == "Inequivalent"


def test_cvpoly_and_jcv(tmp_path, capsys):
    out = tmp_path / "pair.json"
    run_cli(capsys, "pair", "--t", "42", "--out", str(out))
    poly_file = tmp_path / "f.json"
    poly_file.write_text(json.dumps(json.load(open(out))["f"]))
    code, doc = run_cli(capsys, "cvpoly", "--poly", str(poly_file))
    assert code == 0
    assert doc["cvpoly"]["coeffs"][2] == ["98802571392"]
    assert doc["is_morse"] is True
    code, doc = run_cli(capsys, "jcv", "--poly", str(poly_file))
    assert code == 0
    from fractions import Fraction
    from eqcrit.family import jt
    assert Fraction(doc["jcv"]) == jt(Fraction(42)).as_rational()


def test_maps(capsys):
    code, doc = run_cli(capsys, "maps", "--eval", "beta4", "--at", "1536")
    assert code == 0 and doc["value"] == "0"
    code, doc = run_cli(capsys, "maps", "--eval", "beta4", "--at", "1728")
    assert doc["value"] == "inf"
    code, doc = run_cli(capsys, "maps", "--eval", "pi3", "--at", "-3")
    assert doc["value"] == "0"
    code, doc = run_cli(capsys, "maps", "--eval", "psi4", "--at", "1728")
    assert doc["value"] == "0"
    code, doc = run_cli(capsys, "maps", "--eval", "jt", "--at", "2")
    assert doc["value"] == "884736/343"
    code, doc = run_cli(capsys, "maps", "--eval", "x1", "--at", "inf")
    assert doc["value"] == "0"


def test_fiber(capsys):
    code, doc = run_cli(capsys, "fiber", "--jcv", "0")
    assert code == 0
    assert doc["points"] == [["0", 1], ["1536", 3]]
    assert doc["total_multiplicity"] == 4
    code, doc = run_cli(capsys, "fiber", "--jcv", "inf")
    assert doc["points"] == [["1728", 1], ["inf", 3]]
    code, doc = run_cli(capsys, "fiber", "--jcv", "1728")
    assert doc["points"] == [] and doc["accounted_multiplicity"] == 0


def test_classify_and_lift(capsys):
    # theta([1, -2, 3]) critical values are realized by a rational quartic
    from eqcrit.critical import theta
    from eqcrit.jsonio import format_rational
    ys = [format_rational(v.as_rational()) for v in theta([1, -2, 3])]
    code, doc = run_cli(capsys, "classify", f"--y1={ys[0]}", f"--y2={ys[1]}",
                        f"--y3={ys[2]}")
    assert code == 0 and doc["exists"] is True and doc["witness_u"] is not None
    code, doc = run_cli(capsys, "lift", f"--y1={ys[0]}", f"--y2={ys[1]}",
                        f"--y3={ys[2]}")
    assert code == 0 and doc["lift"] is not None

    code, doc = run_cli(capsys, "classify", "--y1", "0", "--y2", "1",
                        "--y3=-1")
    assert code == 2 and doc["exists"] == "out-of-scope"

    code, doc = run_cli(capsys, "classify", "--y1", "0", "--y2", "1",
                        "--y3", "3")
    if doc["exists"] is False:
        code2, doc2 = run_cli(capsys, "lift", "--y1", "0", "--y2", "1",
                              "--y3", "3")
        assert code2 == 2 and doc2["lift"] is None


def test_weyl_command(capsys):
    code, doc = run_cli(capsys, "weyl", "--t", "42", "--p", "101", "--a", "7")
    assert code == 0
    assert doc["exact_multiset_equal"] is True
    assert doc["within_tolerance"] is True
    assert abs(doc["W_f"][0] - doc["W_g"][0]) < 1e-9
    code, doc = run_cli(capsys, "weyl", "--t", "42", "--p", "7", "--a", "2",
                        "--direct-only")
    assert code == 0 and "W_f" in doc and "reduced_f" not in doc


def test_weyl_bad_prime_exit_1(capsys):
    code, doc = run_cli(capsys, "weyl", "--t", "42", "--p", "9", "--a", "1")
    assert code == 1 and doc["error"]["type"] == "NotPrime"


def test_sweep_csv(tmp_path, capsys):
    out = tmp_path / "rows.csv"
    code = main(["sweep", "--t-from", "-3", "--t-to", "3", "--out", str(out)])
    capsys.readouterr()
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0].split(",")[:5] == ["t", "case", "j1", "j2", "jt"]
    assert len(lines) == 8
    import csv
    rows = list(csv.DictReader(out.open()))
    cases = {r["t"]: r["case"] for r in rows}
    assert cases["0"] == "T0" and cases["1"] == "T1" and cases["-2"] == "Tm2"
    for r in rows:
        assert r["equicritical"] == "true"
        assert r["inequivalent"] == "true"


def test_console_script_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "eqcrit", "maps", "--eval", "beta4", "--at", "0"],
        capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"] == "0"
